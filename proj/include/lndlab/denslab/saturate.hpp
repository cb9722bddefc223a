#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lndlab/fields/lnd.hpp"

namespace lnd::denslab {

using fields::Derivation;
using fields::OvershearField;

/// Left-normed bracket [g_{l0}, [g_{l1}, [..., g_{lk}]]] over generator indices.
struct LieWord {
  std::vector<std::size_t> letters;
  std::string render() const;
};

/// One basis field of the certified span with its Lie-word combination.
struct SaturationWitness {
  Derivation field;
  std::vector<std::pair<std::size_t, polyalg::Coeff>> combination;  // (index into words, coefficient)
};

struct SaturationReport {
  std::vector<std::string> generators;
  long target_deg = 0;
  long work_deg = 0;
  int max_len = 0;
  std::size_t span_dim = 0;
  std::size_t target_dim = 0;
  bool certified = false;
  std::vector<LieWord> words;  // independent words, in discovery order
  std::vector<SaturationWitness> witnesses;
  std::size_t brackets_computed = 0;
  std::size_t brackets_discarded = 0;
};

/// Dimension of the space of tangent derivations with image degree <= deg,
/// from the rank of the tangency linear system.
std::size_t tangent_field_dim(const fields::AffineVariety& x, long deg);

/// All overshears f*D with D from `lnds` and f running over a kernel basis of
/// D^2 up to multiplier degree `mult_deg`.
std::vector<OvershearField> overshear_generators(std::span<const fields::Lnd> lnds,
                                                 std::span<const std::string> names, long mult_deg);

/// Closes the generators under left-normed brackets up to `max_len`, dropping
/// brackets of degree > work_deg, and compares the span of the resulting
/// fields of degree <= target_deg with tangent_field_dim(target_deg).
/// certified = true is sound; false means inconclusive at these bounds.
SaturationReport lie_saturate(std::span<const OvershearField> gens, long target_deg, long work_deg, int max_len);

/// Evaluates a word's field from the generators.
Derivation evaluate_word(const LieWord& word, std::span<const OvershearField> gens);

/// Replays every witness: the stated combination of words reproduces its field exactly.
bool replay_witnesses(const SaturationReport& report, std::span<const OvershearField> gens);

}  // namespace lnd::denslab
