#pragma once

#include <complex>
#include <string>

#include <gmpxx.h>

namespace lnd::polyalg {

/// Exact element of the Gaussian rationals Q(i).
///
/// Both parts are GMP rationals kept in lowest terms with positive
/// denominator, so `operator==` is a decision, not a tolerance test.
class Coeff {
 public:
  Coeff() = default;
  Coeff(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Coeff(mpq_class re, mpq_class im = 0);

  static Coeff imaginary_unit() { return Coeff(0, 1); }
  /// Builds num/den; throws std::domain_error on a zero denominator.
  static Coeff fraction(long num, long den);

  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const noexcept { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const noexcept { return sgn(im_) == 0; }

  Coeff conj() const { return Coeff(re_, -im_); }
  /// Multiplicative inverse; throws std::domain_error for zero.
  Coeff inverse() const;
  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  Coeff operator-() const { return Coeff(-re_, -im_); }
  Coeff& operator+=(const Coeff& o);
  Coeff& operator-=(const Coeff& o);
  Coeff& operator*=(const Coeff& o);
  Coeff& operator/=(const Coeff& o) { return *this *= o.inverse(); }

  friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
  friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
  friend Coeff operator*(Coeff a, const Coeff& b) { return a *= b; }
  friend Coeff operator/(Coeff a, const Coeff& b) { return a /= b; }
  friend bool operator==(const Coeff& a, const Coeff& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  /// Rendering in the polynomial grammar: `3`, `-1/2`, `2*I`, `(1/2 + 3*I)`.
  std::string to_string() const;

 private:
  mpq_class re_ = 0;
  mpq_class im_ = 0;
};

}  // namespace lnd::polyalg
