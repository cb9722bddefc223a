#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lndlab/polyalg/coefficient.hpp"
#include "lndlab/polyalg/monomial.hpp"
#include "lndlab/polyalg/ring.hpp"

namespace lnd::polyalg {

/// Sparse multivariate polynomial over Q(i).
///
/// Terms live in a map keyed by exponent vector, sorted by grevlex
/// (largest first), and never hold a zero coefficient.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Coeff, GrevlexDescending>;

  Polynomial() = default;
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

  static Polynomial constant(const Ring& ring, const Coeff& c);
  static Polynomial variable(const Ring& ring, std::string_view name);
  static Polynomial variable(const Ring& ring, std::size_t index);
  static Polynomial monomial(const Ring& ring, Monomial m, const Coeff& c = 1);

  const Ring& ring() const noexcept { return ring_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Total degree; -1 for the zero polynomial.
  long degree() const;
  /// Degree in a single variable; -1 for zero.
  long degree_in(std::size_t var) const;

  Coeff coefficient(const Monomial& m) const;
  Coeff constant_term() const;

  /// Accumulates c*m into this polynomial (builder primitive; drops zeros).
  void add_term(const Monomial& m, const Coeff& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Coeff& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Coeff& c) { return a *= c; }
  friend Polynomial operator*(const Coeff& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

  /// Canonical text in the polynomial grammar; parse(to_string()) == *this.
  std::string to_string() const;

 private:
  Ring ring_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

Polynomial pow(const Polynomial& f, std::uint32_t k);

/// c * m * f, the workhorse of division and elimination.
Polynomial scale_shift(const Polynomial& f, const Coeff& c, const Monomial& m);

/// Formal partial derivative.
Polynomial partial(const Polynomial& f, std::size_t var);
Polynomial partial(const Polynomial& f, std::string_view var);

/// Homogeneous component of the given total degree.
Polynomial homogeneous_part(const Polynomial& f, long degree);

/// Binary64 evaluation; throws ArityMismatch.
std::complex<double> evaluate(const Polynomial& f, std::span<const std::complex<double>> point);
/// Exact evaluation at a Gaussian-rational point; throws ArityMismatch.
Coeff evaluate_exact(const Polynomial& f, std::span<const Coeff> point);

/// f(images[0], ..., images[n-1]); all images must share one target ring.
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images);
/// Substitution by variable name; every ring variable needs an image.
Polynomial substitute(const Polynomial& f, const std::map<std::string, Polynomial>& images);

/// Re-expresses f in `target`, which must contain every variable f uses.
Polynomial embed(const Polynomial& f, const Ring& target);

/// Throws RingMismatch unless both rings agree.
void require_same_ring(const Ring& a, const Ring& b);

}  // namespace lnd::polyalg
