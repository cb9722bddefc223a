#pragma once

#include <vector>

#include "lndlab/fields/derivation.hpp"

namespace lnd::denslab {

using fields::Derivation;
using fields::RingElement;

/// Exact basis of { f in C[X] of degree <= deg_bound : D^power(f) = 0 },
/// solved as a linear system in the standard-monomial coefficients.
/// Basis order follows the free monomials in ascending grevlex order.
std::vector<RingElement> kernel_basis(const Derivation& d, unsigned power, long deg_bound);

}  // namespace lnd::denslab
