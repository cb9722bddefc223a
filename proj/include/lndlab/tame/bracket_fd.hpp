#pragma once

#include <complex>
#include <span>
#include <vector>

#include "lndlab/fields/flow.hpp"

namespace lnd::tame {

struct BracketFdResult {
  std::vector<std::complex<double>> fd_vector;
  std::vector<std::complex<double>> exact_vector;
  double abs_error = 0.0;  // max-norm of the difference
};

/// Finite-difference shadow of the Lie derivative along an LND:
///   fd = (dphi_{-t} other(phi_t(x)) - other(x)) / t,
/// with phi the exact flow of `theta` and its Jacobian taken symbolically,
/// compared with [theta, other] evaluated at x.
BracketFdResult bracket_flow_check(const fields::Lnd& theta, const fields::Derivation& other,
                                   std::span<const polyalg::Coeff> point, double t);

}  // namespace lnd::tame
