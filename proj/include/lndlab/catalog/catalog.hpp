#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lndlab/fields/lnd.hpp"

namespace lnd::catalog {

using fields::Lnd;
using fields::OvershearField;
using fields::RingElement;
using fields::VarietyPtr;
using polyalg::Coeff;
using polyalg::Polynomial;

template <typename T>
struct Named {
  std::string name;
  T value;
};

struct UnitPair {
  RingElement f;
  RingElement g;
};

/// A variety with pre-verified LNDs, overshear samples, unit witnesses and
/// fixture points. Constructors validate every item and throw
/// InvariantFailure naming the first one that fails.
struct VarietyBundle {
  std::string name;
  VarietyPtr variety;
  std::vector<Named<Lnd>> lnds;
  std::vector<Named<OvershearField>> overshear_samples;
  std::vector<UnitPair> units;
  std::vector<RingElement> ideal_candidates;
  std::vector<std::pair<std::string, std::string>> pair_candidates;  // (theta, xi) LND names
  std::vector<std::vector<Coeff>> points;
  std::string notes;

  /// Throws std::out_of_range.
  const Lnd& lnd(const std::string& name) const;
  const OvershearField& overshear(const std::string& name) const;
  std::vector<Lnd> all_lnds() const;
  std::vector<std::string> lnd_names() const;
};

/// C^n with coordinate LNDs and coordinate shear / overshear samples.
/// Variables: z (n=1); x, y (n=2); x, y, z (n=3); z1..zn otherwise.
VarietyBundle affine_space(int n);

/// uv = p(z_1..z_n); p is given over the z-variables (z for n=1, z1..zn
/// otherwise). Ambient order (z..., u, v); monomial precedence u > v > z....
VarietyBundle danielewski(const Polynomial& p, int n);
/// Parses p in the z-ring first.
VarietyBundle danielewski(const std::string& p, int n);

VarietyBundle sl2();
VarietyBundle gl2();
VarietyBundle koras_russell();

/// `cn:<n>`, `danielewski:p=<poly>:n=<k>`, `sl2`, `gl2`, `koras-russell`.
/// Throws std::invalid_argument for unknown names.
VarietyBundle bundle_by_name(const std::string& spec);

/// Names accepted by bundle_by_name, as examples.
std::vector<std::string> bundle_names();

}  // namespace lnd::catalog
