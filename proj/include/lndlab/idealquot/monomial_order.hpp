#pragma once

#include <string>
#include <vector>

#include "lndlab/polyalg/polynomial.hpp"

namespace lnd::idealquot {

using polyalg::Coeff;
using polyalg::Monomial;
using polyalg::Polynomial;
using polyalg::Ring;

enum class OrderKind { grevlex, lex };

/// A monomial order over a ring: grevlex or lex with an explicit variable
/// precedence (indices into the ring, most significant first).
class MonomialOrder {
 public:
  /// Natural precedence: the ring's declaration order.
  static MonomialOrder grevlex(const Ring& ring);
  static MonomialOrder lex(const Ring& ring);
  /// `precedence` names every ring variable exactly once, highest first.
  static MonomialOrder make(OrderKind kind, const Ring& ring, const std::vector<std::string>& precedence);

  OrderKind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& precedence() const noexcept { return precedence_; }

  /// <0, 0, >0 as a is smaller, equal, or larger than b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  /// Same order on a ring with `extra` new variables appended as least significant.
  MonomialOrder extended(std::size_t extra) const;

  std::string describe(const Ring& ring) const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence)
      : kind_(kind), precedence_(std::move(precedence)) {}

  OrderKind kind_;
  std::vector<std::size_t> precedence_;
};

struct Term {
  Monomial mono;
  Coeff coeff;
};

/// Leading term under `order`; the polynomial must be nonzero.
Term leading_term(const Polynomial& f, const MonomialOrder& order);

/// Comparator wrapper placing larger monomials first.
struct OrderDescending {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->compare(a, b) > 0; }
};

}  // namespace lnd::idealquot
