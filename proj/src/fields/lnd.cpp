#include "lndlab/fields/lnd.hpp"

#include <algorithm>

#include "lndlab/errors.hpp"

namespace lnd::fields {

int LndCertificate::max_index() const {
  return indices.empty() ? 0 : *std::max_element(indices.begin(), indices.end());
}

bool Lnd::replay() const {
  const auto& ring = variety()->ring();
  for (std::size_t i = 0; i < ring.arity(); ++i) {
    const int n = certificate_.indices.at(i);
    RingElement x(variety(), Polynomial::variable(ring, i));
    if (!derivation_.apply_power(x, static_cast<unsigned>(n)).is_zero()) return false;
    if (n > 0 && derivation_.apply_power(x, static_cast<unsigned>(n - 1)).is_zero()) return false;
  }
  return true;
}

const Lnd& LndVerdict::lnd() const {
  if (!lnd_) throw UncertifiedDerivation("derivation not certified nilpotent within " + std::to_string(bound_) + " steps");
  return *lnd_;
}

LndVerdict check_lnd(const Derivation& d, int max_iter) {
  if (max_iter <= 0) throw std::invalid_argument("max_iter must be positive");
  const auto& variety = d.variety();
  const auto& ring = variety->ring();
  LndCertificate cert;
  for (std::size_t i = 0; i < ring.arity(); ++i) {
    Polynomial g = variety->reduce(Polynomial::variable(ring, i));
    int k = 0;
    while (!g.is_zero() && k < max_iter) {
      g = d.apply(g);
      ++k;
    }
    if (!g.is_zero()) return LndVerdict(std::nullopt, max_iter);
    cert.indices.push_back(k);
  }
  return LndVerdict(Lnd(d, std::move(cert)), max_iter);
}

Lnd certify(const Derivation& d, int max_iter) { return check_lnd(d, max_iter).lnd(); }

Lnd make_shear(const Lnd& base, const RingElement& f) {
  const RingElement residue = base.derivation().apply(f);
  if (!residue.is_zero()) throw ShearConditionViolated(residue.to_string());
  // (fD)^k = f^k D^k when D(f) = 0, so each index is bounded by the base one.
  Derivation field = base.derivation().scaled(f);
  LndVerdict v = check_lnd(field, std::max(1, base.certificate().max_index()));
  if (!v.nilpotent()) throw InvariantFailure("shear of an LND failed to certify within the base indices");
  return v.lnd();
}

OvershearField OvershearField::with_label(std::string label) const {
  OvershearField copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

OvershearField make_overshear(const Lnd& base, const RingElement& f) {
  RingElement a = base.derivation().apply(f);
  RingElement residue = base.derivation().apply(a);
  if (!residue.is_zero()) throw OvershearConditionViolated(residue.to_string());
  return OvershearField(base, f, std::move(a));
}

}  // namespace lnd::fields
