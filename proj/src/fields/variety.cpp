#include "lndlab/fields/variety.hpp"

#include "lndlab/errors.hpp"
#include "lndlab/polyalg/parser.hpp"

namespace lnd::fields {

VarietyPtr AffineVariety::create(std::string name, Ring ring, std::vector<Polynomial> defining,
                                 std::optional<MonomialOrder> order) {
  for (const auto& v : ring.vars()) {
    if (v == kTimeVar || v == kAltTimeVar) {
      throw std::invalid_argument("variable name '" + v + "' is reserved for flow time");
    }
  }
  for (const auto& q : defining) polyalg::require_same_ring(q.ring(), ring);
  MonomialOrder ord = order ? *order : MonomialOrder::grevlex(ring);
  std::vector<Polynomial> nonzero;
  for (const auto& q : defining) {
    if (!q.is_zero()) nonzero.push_back(q);
  }
  GroebnerBasis gb = nonzero.empty() ? GroebnerBasis(ring, ord, {}) : idealquot::groebner(nonzero, ord);
  return VarietyPtr(new AffineVariety(std::move(name), std::move(ring), std::move(defining), std::move(gb)));
}

Polynomial AffineVariety::reduce(const Polynomial& f) const { return idealquot::normal_form(f, gb_); }

bool AffineVariety::contains_point(std::span<const Coeff> point) const {
  if (point.size() != arity()) throw ArityMismatch("point arity differs from variety ambient dimension");
  for (const auto& q : defining_) {
    if (!polyalg::evaluate_exact(q, point).is_zero()) return false;
  }
  return true;
}

std::vector<Monomial> AffineVariety::monomial_basis(long max_degree) const {
  return idealquot::standard_monomials(gb_, max_degree);
}

Polynomial AffineVariety::parse(std::string_view src) const { return polyalg::parse_poly(src, ring_); }

void require_same_variety(const VarietyPtr& a, const VarietyPtr& b) {
  if (!a || !b || !a->same_as(*b)) throw VarietyMismatch("objects live on different varieties");
}

RingElement::RingElement(VarietyPtr variety, const Polynomial& rep)
    : variety_(std::move(variety)), rep_(variety_->reduce(rep)) {}

RingElement RingElement::constant(VarietyPtr variety, const Coeff& c) {
  Ring ring = variety->ring();
  return RingElement(std::move(variety), Polynomial::constant(ring, c));
}

RingElement operator+(const RingElement& a, const RingElement& b) {
  require_same_variety(a.variety_, b.variety_);
  return RingElement(a.variety_, a.rep_ + b.rep_);
}

RingElement operator-(const RingElement& a, const RingElement& b) {
  require_same_variety(a.variety_, b.variety_);
  return RingElement(a.variety_, a.rep_ - b.rep_);
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  require_same_variety(a.variety_, b.variety_);
  return RingElement(a.variety_, a.rep_ * b.rep_);
}

RingElement operator*(const Coeff& c, const RingElement& a) { return RingElement(a.variety_, a.rep_ * c); }

}  // namespace lnd::fields
