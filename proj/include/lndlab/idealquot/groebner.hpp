#pragma once

#include <span>
#include <vector>

#include "lndlab/idealquot/monomial_order.hpp"

namespace lnd::idealquot {

/// Reduced, monic Gröbner basis. Generators are sorted by leading monomial,
/// largest first, so two bases of the same ideal compare equal.
class GroebnerBasis {
 public:
  GroebnerBasis(Ring ring, MonomialOrder order, std::vector<Polynomial> gens);

  const Ring& ring() const noexcept { return ring_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<Polynomial>& gens() const noexcept { return gens_; }
  const std::vector<Monomial>& leading_monomials() const noexcept { return leads_; }

  bool is_zero_ideal() const noexcept { return gens_.empty(); }
  bool is_unit_ideal() const;

  /// True when no leading monomial divides m.
  bool is_standard(const Monomial& m) const;

  /// The same generators viewed in `target`, a ring that appends variables
  /// to this one; those variables become least significant in the order.
  GroebnerBasis lifted(const Ring& target) const;

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.ring_ == b.ring_ && a.order_ == b.order_ && a.gens_ == b.gens_;
  }

 private:
  Ring ring_;
  MonomialOrder order_;
  std::vector<Polynomial> gens_;
  std::vector<Monomial> leads_;
};

/// Buchberger's algorithm with the product and chain criteria, followed by
/// inter-reduction. Zero generators are ignored.
GroebnerBasis groebner(std::span<const Polynomial> gens, const MonomialOrder& order);

/// Full multivariate division remainder: no term is divisible by a leading monomial.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

bool in_ideal(const Polynomial& f, const GroebnerBasis& gb);

/// Standard monomials (not in the leading-term ideal) of total degree <= max_degree,
/// in ascending grevlex order.
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, long max_degree);

}  // namespace lnd::idealquot
