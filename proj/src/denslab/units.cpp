#include "lndlab/denslab/units.hpp"

#include "lndlab/errors.hpp"

namespace lnd::denslab {

bool verify_unit_witness(const fields::AffineVariety& x, const fields::RingElement& f, const fields::RingElement& g) {
  if (!f.variety()->same_as(x) || !g.variety()->same_as(x)) throw VarietyMismatch("unit witness on another variety");
  if (f.is_constant()) return false;
  const auto product = f * g;
  return product.rep() == polyalg::Polynomial::constant(x.ring(), 1);
}

bool lnd_annihilates_units(const fields::Lnd& d, const fields::RingElement& f, const fields::RingElement& g) {
  fields::require_same_variety(d.variety(), f.variety());
  fields::require_same_variety(d.variety(), g.variety());
  // Constant units are accepted; D kills them trivially.
  if (!((f * g).rep() == polyalg::Polynomial::constant(d.variety()->ring(), 1))) {
    throw PreconditionViolation("f * g is not 1 in the coordinate ring");
  }
  return d.derivation().apply(f).is_zero();
}

}  // namespace lnd::denslab
