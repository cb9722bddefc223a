#include "lndlab/fields/flow.hpp"

#include <cmath>

#include "lndlab/errors.hpp"

namespace lnd::fields {

namespace {

Coeff factorial_inverse(int k) {
  mpz_class f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return Coeff(mpq_class(mpz_class(1), f));
}

// Exact image of every defining polynomial under the flow, minus itself, reduced.
bool preserves(const PolynomialFlow& flow) {
  const auto& variety = flow.variety;
  if (variety->defining().empty()) return true;
  GroebnerBasis lifted = variety->gb().lifted(flow.time_ring);
  for (const auto& q : variety->defining()) {
    Polynomial moved = polyalg::substitute(q, std::span<const Polynomial>(flow.images));
    Polynomial diff = moved - polyalg::embed(q, flow.time_ring);
    if (!idealquot::in_ideal(diff, lifted)) return false;
  }
  return true;
}

std::complex<double> expm1_complex(std::complex<double> w) {
  const double x = w.real();
  const double y = w.imag();
  const double half_sin = std::sin(0.5 * y);
  const double re = std::expm1(x) * std::cos(y) - 2.0 * half_sin * half_sin;
  const double im = std::exp(x) * std::sin(y);
  return {re, im};
}

std::vector<std::complex<double>> eval_poly_flow(const PolynomialFlow& flow, std::complex<double> time,
                                                 std::span<const std::complex<double>> point) {
  if (point.size() != flow.variety->arity()) throw ArityMismatch("point arity differs from ambient dimension");
  std::vector<std::complex<double>> extended(point.begin(), point.end());
  extended.push_back(time);
  std::vector<std::complex<double>> out;
  out.reserve(flow.images.size());
  for (const auto& img : flow.images) out.push_back(polyalg::evaluate(img, extended));
  return out;
}

}  // namespace

std::vector<Polynomial> PolynomialFlow::at(const Coeff& time) const {
  const Ring& ambient = variety->ring();
  std::vector<Polynomial> subst;
  for (std::size_t i = 0; i < ambient.arity(); ++i) subst.push_back(Polynomial::variable(ambient, i));
  subst.push_back(Polynomial::constant(ambient, time));
  std::vector<Polynomial> out;
  for (const auto& img : images) out.push_back(polyalg::substitute(img, std::span<const Polynomial>(subst)));
  return out;
}

bool PolynomialFlow::preserves_ideal() const { return preserves(*this); }

std::complex<double> phi1(std::complex<double> w) {
  if (std::abs(w) < 1e-8) return 1.0 + w / 2.0 + w * w / 6.0;
  return expm1_complex(w) / w;
}

PolynomialFlow flow_lnd(const Lnd& d, const std::string& time_var) {
  const auto& variety = d.variety();
  const Ring& ambient = variety->ring();
  Ring time_ring = ambient.extended({time_var});
  const std::size_t tvar = ambient.arity();
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < ambient.arity(); ++i) {
    Polynomial image(time_ring);
    Polynomial term = variety->reduce(Polynomial::variable(ambient, i));
    const int n = d.certificate().indices.at(i);
    for (int k = 0; k < n; ++k) {
      Monomial tk(time_ring.arity(), 0);
      tk[tvar] = static_cast<std::uint32_t>(k);
      image += polyalg::scale_shift(polyalg::embed(term, time_ring), factorial_inverse(k), tk);
      term = d.derivation().apply(term);
    }
    images.push_back(std::move(image));
  }
  PolynomialFlow flow{variety, time_ring, time_var, std::move(images)};
  if (!flow.preserves_ideal()) throw InvariantFailure("LND flow does not preserve the defining ideal");
  return flow;
}

FlowMap flow_overshear(const OvershearField& o) {
  if (!o.is_shear()) return HybridFlow{flow_lnd(o.base(), kAltTimeVar), o.f(), o.a()};

  // s = f * t: substitute into the base flow in s, then reduce modulo the lifted ideal.
  PolynomialFlow in_s = flow_lnd(o.base(), kAltTimeVar);
  const auto& variety = o.variety();
  const Ring& ambient = variety->ring();
  Ring time_ring = ambient.extended({kTimeVar});
  std::vector<Polynomial> subst;
  for (std::size_t i = 0; i < ambient.arity(); ++i) subst.push_back(Polynomial::variable(time_ring, i));
  subst.push_back(polyalg::embed(o.f().rep(), time_ring) * Polynomial::variable(time_ring, kTimeVar));
  GroebnerBasis lifted = variety->gb().lifted(time_ring);
  std::vector<Polynomial> images;
  for (const auto& img : in_s.images) {
    images.push_back(idealquot::normal_form(polyalg::substitute(img, std::span<const Polynomial>(subst)), lifted));
  }
  PolynomialFlow flow{variety, time_ring, kTimeVar, std::move(images)};
  if (!flow.preserves_ideal()) throw InvariantFailure("shear flow does not preserve the defining ideal");
  return flow;
}

std::vector<std::complex<double>> eval_flow(const FlowMap& flow, std::complex<double> t,
                                            std::span<const std::complex<double>> point) {
  if (const auto* poly = std::get_if<PolynomialFlow>(&flow)) return eval_poly_flow(*poly, t, point);
  const auto& hybrid = std::get<HybridFlow>(flow);
  if (point.size() != hybrid.f.variety()->arity()) throw ArityMismatch("point arity differs from ambient dimension");
  const std::complex<double> f = polyalg::evaluate(hybrid.f.rep(), point);
  const std::complex<double> a = polyalg::evaluate(hybrid.a.rep(), point);
  const std::complex<double> s = f * t * phi1(a * t);
  return eval_poly_flow(hybrid.poly_flow_in_s, s, point);
}

const VarietyPtr& flow_variety(const FlowMap& flow) {
  if (const auto* poly = std::get_if<PolynomialFlow>(&flow)) return poly->variety;
  return std::get<HybridFlow>(flow).poly_flow_in_s.variety;
}

std::string describe(const FlowMap& flow) {
  auto images = [](const PolynomialFlow& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.images.size(); ++i) {
      if (i) out += ", ";
      out += p.images[i].to_string();
    }
    return out + ")";
  };
  if (const auto* poly = std::get_if<PolynomialFlow>(&flow)) return images(*poly);
  const auto& h = std::get<HybridFlow>(flow);
  return images(h.poly_flow_in_s) + " with s = (" + h.f.to_string() + ")*t*phi1((" + h.a.to_string() + ")*t)";
}

}  // namespace lnd::fields
