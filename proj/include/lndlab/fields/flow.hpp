#pragma once

#include <complex>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "lndlab/fields/lnd.hpp"

namespace lnd::fields {

/// Exact flow of an LND: x_i -> sum_{k < n_i} time^k D^k(x_i) / k!.
/// Images live in the ambient ring extended by the formal time variable.
struct PolynomialFlow {
  VarietyPtr variety;
  Ring time_ring;          // ambient variables followed by `time_var`
  std::string time_var;    // "t" or "s"
  std::vector<Polynomial> images;

  /// Images at an exact time, as polynomials in the ambient ring.
  std::vector<Polynomial> at(const Coeff& time) const;
  /// q(flow) - q is in the (lifted) ideal for every defining q.
  bool preserves_ideal() const;
};

/// Flow of an overshear f*D: the D-flow in formal time s, re-timed by
/// s = f * t * phi1(a * t) with a = D(f).
struct HybridFlow {
  PolynomialFlow poly_flow_in_s;
  RingElement f;
  RingElement a;
};

using FlowMap = std::variant<PolynomialFlow, HybridFlow>;

/// phi1(w) = (e^w - 1) / w, phi1(0) = 1; series for |w| < 1e-8, expm1 quotient otherwise.
std::complex<double> phi1(std::complex<double> w);

/// Throws InvariantFailure if the exact flow fails the ideal-preservation check.
PolynomialFlow flow_lnd(const Lnd& d, const std::string& time_var = kTimeVar);

/// HybridFlow in general; a PolynomialFlow in time t when a = 0 (the shear case).
FlowMap flow_overshear(const OvershearField& o);

/// Numeric image of `point` at complex time `t`. Throws ArityMismatch.
std::vector<std::complex<double>> eval_flow(const FlowMap& flow, std::complex<double> t,
                                            std::span<const std::complex<double>> point);

const VarietyPtr& flow_variety(const FlowMap& flow);

/// Human-readable rendering; images use the polynomial grammar with time symbols.
std::string describe(const FlowMap& flow);

}  // namespace lnd::fields
