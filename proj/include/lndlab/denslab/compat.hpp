#pragma once

#include <optional>
#include <vector>

#include "lndlab/fields/lnd.hpp"

namespace lnd::denslab {

using fields::Lnd;
using fields::RingElement;

struct PairReport {
  std::optional<RingElement> h;
  bool h_nondegenerate = false;        // Theta(h) != 0
  std::vector<RingElement> ideal_gens;
  long containment_verified_to = 0;    // degree bound used for both searches
  bool containment_holds = false;
  std::optional<RingElement> first_missing;  // a product m*g outside the span, if any
  std::size_t kernel_dim_theta = 0;
  std::size_t kernel_dim_xi = 0;
  std::size_t product_span_dim = 0;
  bool is_compatible_at_bound = false;
};

/// Bounded check of the compatible-pair conditions for (theta, xi):
///  (1) some h in ker theta^2 and ker xi (degree <= bound) with theta(h) != 0;
///  (2) every m*g, m a standard monomial of degree <= bound and g in
///      `ideal_gens`, lies in the span of products ker theta * ker xi
///      (factors of degree <= bound).
/// A false verdict means "not verified at this bound", never a disproof.
PairReport check_compatible_pair(const Lnd& theta, const Lnd& xi, const std::vector<RingElement>& ideal_gens,
                                 long deg_bound);

}  // namespace lnd::denslab
