#pragma once

// Hand-rolled generators shared by the property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "lndlab/fields/derivation.hpp"
#include "lndlab/polyalg/polynomial.hpp"

namespace lnd::testing_support {

using polyalg::Coeff;
using polyalg::Monomial;
using polyalg::Polynomial;
using polyalg::Ring;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20261019);
  return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

/// Small Gaussian rational; mostly real, sometimes with an imaginary part.
inline Coeff random_coeff(long max_abs = 5) {
  long num = uniform(-max_abs, max_abs);
  if (num == 0) num = 1;
  Coeff c = Coeff::fraction(num, uniform(1, 3));
  if (uniform(0, 3) == 0) c += Coeff::imaginary_unit() * Coeff(uniform(-2, 2));
  return c;
}

inline Monomial random_monomial(std::size_t arity, long max_deg) {
  Monomial m(arity, 0);
  long budget = uniform(0, max_deg);
  for (long i = 0; i < budget; ++i) m[static_cast<std::size_t>(uniform(0, static_cast<long>(arity) - 1))]++;
  return m;
}

inline Polynomial random_poly(const Ring& ring, long max_deg, int max_terms = 5) {
  Polynomial p(ring);
  const int terms = static_cast<int>(uniform(0, max_terms));
  for (int i = 0; i < terms; ++i) p.add_term(random_monomial(ring.arity(), max_deg), random_coeff());
  return p;
}

/// Random point with small rational coordinates, as doubles.
inline std::vector<std::complex<double>> random_complex_point(std::size_t n) {
  std::vector<std::complex<double>> p;
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (std::size_t i = 0; i < n; ++i) p.emplace_back(d(rng()), d(rng()));
  return p;
}

/// Random polynomial field on affine space (any images are tangent).
inline fields::Derivation random_field(const fields::VarietyPtr& x, long max_deg) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < x->arity(); ++i) images.push_back(random_poly(x->ring(), max_deg, 3));
  return fields::make_derivation(x, images);
}

}  // namespace lnd::testing_support
