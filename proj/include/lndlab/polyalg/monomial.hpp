#pragma once

#include <cstdint>
#include <vector>

namespace lnd::polyalg {

/// Exponent vector; length equals the ring arity.
using Monomial = std::vector<std::uint32_t>;

std::uint64_t total_degree(const Monomial& m);
/// Product of monomials; throws std::overflow_error past 2^31 per exponent.
Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& divisor, const Monomial& m);
/// m / divisor; caller guarantees divisibility.
Monomial mono_div(const Monomial& m, const Monomial& divisor);
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

/// Graded reverse lexicographic order on the ring's natural variable order.
/// Returns <0, 0, >0.
int grevlex_compare(const Monomial& a, const Monomial& b);

/// Comparator placing larger monomials first (canonical storage order).
struct GrevlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_compare(a, b) > 0; }
};

}  // namespace lnd::polyalg
