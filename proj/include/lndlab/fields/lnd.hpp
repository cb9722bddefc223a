#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lndlab/fields/derivation.hpp"

namespace lnd::fields {

inline constexpr int kDefaultMaxIter = 64;

/// Per-variable nilpotency indices: the smallest k with D^k(x_i) = 0 in C[X].
struct LndCertificate {
  std::vector<int> indices;
  int max_index() const;
};

class LndVerdict;

/// A derivation together with a replayable nilpotency certificate.
/// Only `check_lnd` and `make_shear` produce these.
class Lnd {
 public:
  const Derivation& derivation() const noexcept { return derivation_; }
  const LndCertificate& certificate() const noexcept { return certificate_; }
  const VarietyPtr& variety() const noexcept { return derivation_.variety(); }

  /// Re-runs D n_i times on each variable and checks the indices are minimal.
  bool replay() const;

 private:
  friend class LndVerdict;
  friend LndVerdict check_lnd(const Derivation&, int);
  friend Lnd make_shear(const Lnd&, const RingElement&);
  Lnd(Derivation d, LndCertificate c) : derivation_(std::move(d)), certificate_(std::move(c)) {}

  Derivation derivation_;
  LndCertificate certificate_;
};

/// Nilpotent(certificate) or Inconclusive(bound). There is no "not an LND" verdict.
class LndVerdict {
 public:
  bool nilpotent() const noexcept { return lnd_.has_value(); }
  /// Throws UncertifiedDerivation when inconclusive.
  const Lnd& lnd() const;
  int bound() const noexcept { return bound_; }

 private:
  friend LndVerdict check_lnd(const Derivation&, int);
  LndVerdict(std::optional<Lnd> lnd, int bound) : lnd_(std::move(lnd)), bound_(bound) {}

  std::optional<Lnd> lnd_;
  int bound_;
};

/// Iterates D on every ambient variable up to `max_iter` times. Testing the
/// generators suffices: locally nilpotent elements form a subalgebra.
LndVerdict check_lnd(const Derivation& d, int max_iter = kDefaultMaxIter);

/// Shorthand: check_lnd(...).lnd(), throwing UncertifiedDerivation on Inconclusive.
Lnd certify(const Derivation& d, int max_iter = kDefaultMaxIter);

/// f*D for f in ker D. Throws ShearConditionViolated carrying D(f).
Lnd make_shear(const Lnd& base, const RingElement& f);

/// f*D with D^2(f) = 0, keeping a = D(f) (so D(a) = 0).
class OvershearField {
 public:
  const Lnd& base() const noexcept { return base_; }
  const RingElement& f() const noexcept { return f_; }
  const RingElement& a() const noexcept { return a_; }
  const VarietyPtr& variety() const noexcept { return base_.variety(); }
  bool is_shear() const noexcept { return a_.is_zero(); }

  /// The vector field f*D itself.
  Derivation field() const { return base_.derivation().scaled(f_); }

  /// Free-form label used in reports (catalog or user supplied).
  const std::string& label() const noexcept { return label_; }
  OvershearField with_label(std::string label) const;

 private:
  friend OvershearField make_overshear(const Lnd&, const RingElement&);
  OvershearField(Lnd base, RingElement f, RingElement a)
      : base_(std::move(base)), f_(std::move(f)), a_(std::move(a)) {}

  Lnd base_;
  RingElement f_;
  RingElement a_;
  std::string label_;
};

/// Throws OvershearConditionViolated carrying D^2(f).
OvershearField make_overshear(const Lnd& base, const RingElement& f);

}  // namespace lnd::fields
