#include "lndlab/tame/bracket_fd.hpp"

#include <algorithm>

#include "lndlab/errors.hpp"

namespace lnd::tame {

using polyalg::Polynomial;

BracketFdResult bracket_flow_check(const fields::Lnd& theta, const fields::Derivation& other,
                                   std::span<const polyalg::Coeff> point, double t) {
  if (t == 0.0) throw std::invalid_argument("finite-difference time must be nonzero");
  fields::require_same_variety(theta.variety(), other.variety());
  const std::size_t n = theta.variety()->arity();
  if (point.size() != n) throw ArityMismatch("point arity differs from ambient dimension");

  const fields::PolynomialFlow flow = fields::flow_lnd(theta);
  std::vector<std::complex<double>> x;
  for (const auto& c : point) x.push_back(c.to_complex());

  // phi_t(x)
  std::vector<std::complex<double>> xt(x);
  xt.push_back(t);
  std::vector<std::complex<double>> moved;
  for (const auto& img : flow.images) moved.push_back(polyalg::evaluate(img, xt));

  // Jacobian of phi_{-t} at phi_t(x), from symbolic partials of the flow images.
  std::vector<std::complex<double>> back(moved);
  back.push_back(-t);
  const auto w = other.value_at(std::span<const std::complex<double>>(moved));
  BracketFdResult r;
  const auto here = other.value_at(std::span<const std::complex<double>>(x));
  for (std::size_t i = 0; i < n; ++i) {
    std::complex<double> push = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (w[j] == 0.0) continue;
      push += polyalg::evaluate(polyalg::partial(flow.images[i], j), back) * w[j];
    }
    r.fd_vector.push_back((push - here[i]) / t);
  }
  r.exact_vector = fields::lie_bracket(theta.derivation(), other).value_at(std::span<const std::complex<double>>(x));
  for (std::size_t i = 0; i < n; ++i) r.abs_error = std::max(r.abs_error, std::abs(r.fd_vector[i] - r.exact_vector[i]));
  return r;
}

}  // namespace lnd::tame
