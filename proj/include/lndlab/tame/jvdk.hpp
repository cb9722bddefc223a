#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lndlab/tame/polymap.hpp"

namespace lnd::tame {

/// (x, y) -> matrix * (x, y) + translation, det(matrix) != 0.
struct AffineFactor {
  std::array<std::array<Coeff, 2>, 2> matrix;
  std::array<Coeff, 2> translation;

  static AffineFactor identity();
  bool is_identity() const;
  Coeff determinant() const;
};

/// axis 1: (x + p(y), y); axis 2: (x, y + p(x)). p is monic of degree >= 2
/// and is stored as a polynomial in the map's ring.
struct ElementaryFactor {
  int axis;
  Polynomial added;
};

using Factor = std::variant<AffineFactor, ElementaryFactor>;

/// F = factors[0] o factors[1] o ... (the last factor is applied first).
struct FactorList {
  Ring ring;
  std::vector<Factor> factors;
};

PolyMap factor_map(const Ring& ring, const Factor& f);
PolyMap recompose(const FactorList& list);

struct DecomposeResult {
  std::optional<FactorList> factors;  // empty means Inconclusive
  int steps = 0;
  std::string reason;  // why the reduction stopped, when inconclusive
};

/// Jung–van der Kulk degree reduction for plane maps. Each step peels
/// c*(lead of one component)^k off the other. Elementary factors are made
/// monic by conjugating with diagonal scalings, which merge into adjacent
/// affine factors. The recomposition is checked before returning
/// (InvariantFailure otherwise).
DecomposeResult jvdk_decompose(const PolyMap& map, int max_steps = 64);

}  // namespace lnd::tame
