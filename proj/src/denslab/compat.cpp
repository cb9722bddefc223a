#include "lndlab/denslab/compat.hpp"

#include <map>

#include "lndlab/denslab/kernel.hpp"
#include "lndlab/denslab/linalg.hpp"
#include "lndlab/errors.hpp"

namespace lnd::denslab {

using polyalg::Coeff;
using polyalg::Monomial;
using polyalg::Polynomial;

namespace {

using MonoSpan = EchelonSpan<Monomial, polyalg::GrevlexDescending>;

MonoSpan::Vector coordinates(const Polynomial& p) {
  MonoSpan::Vector v;
  for (const auto& [m, c] : p.terms()) v.emplace(m, c);
  return v;
}

// First element h of span(ker theta^2) with xi(h) = 0 and theta(h) != 0.
std::optional<RingElement> find_h(const Lnd& theta, const Lnd& xi, long bound) {
  const auto& variety = theta.variety();
  const auto k2 = kernel_basis(theta.derivation(), 2, bound);
  if (k2.empty()) return std::nullopt;

  // Columns: xi applied to each kernel element.
  std::vector<Polynomial> images;
  std::map<Monomial, std::size_t, polyalg::GrevlexDescending> row_of;
  for (const auto& k : k2) {
    images.push_back(xi.derivation().apply(k).rep());
    for (const auto& [m, c] : images.back().terms()) row_of.try_emplace(m, row_of.size());
  }
  Matrix a(row_of.size(), k2.size());
  for (std::size_t j = 0; j < k2.size(); ++j) {
    for (const auto& [m, c] : images[j].terms()) a.at(row_of.at(m), j) = c;
  }
  for (const auto& v : nullspace(a)) {
    Polynomial h(variety->ring());
    for (std::size_t j = 0; j < k2.size(); ++j) {
      if (!v[j].is_zero()) h += k2[j].rep() * v[j];
    }
    RingElement candidate(variety, h);
    if (!theta.derivation().apply(candidate).is_zero()) return candidate;
  }
  return std::nullopt;
}

}  // namespace

PairReport check_compatible_pair(const Lnd& theta, const Lnd& xi, const std::vector<RingElement>& ideal_gens,
                                 long deg_bound) {
  fields::require_same_variety(theta.variety(), xi.variety());
  const auto& variety = theta.variety();
  for (const auto& g : ideal_gens) {
    fields::require_same_variety(variety, g.variety());
    if (g.is_zero()) throw PreconditionViolation("ideal generators must be nonzero in C[X]");
  }

  PairReport report;
  report.ideal_gens = ideal_gens;
  report.containment_verified_to = deg_bound;

  report.h = find_h(theta, xi, deg_bound);
  if (report.h) {
    if (!theta.derivation().apply_power(*report.h, 2).is_zero() || !xi.derivation().apply(*report.h).is_zero()) {
      throw InvariantFailure("selected h violates the kernel conditions");
    }
    report.h_nondegenerate = !theta.derivation().apply(*report.h).is_zero();
  }

  const auto ker_theta = kernel_basis(theta.derivation(), 1, deg_bound);
  const auto ker_xi = kernel_basis(xi.derivation(), 1, deg_bound);
  report.kernel_dim_theta = ker_theta.size();
  report.kernel_dim_xi = ker_xi.size();

  MonoSpan products;
  for (const auto& k : ker_theta) {
    for (const auto& l : ker_xi) products.insert(coordinates((k * l).rep()));
  }
  report.product_span_dim = products.dimension();

  report.containment_holds = !ideal_gens.empty();
  for (const auto& m : variety->monomial_basis(deg_bound)) {
    if (!report.containment_holds) break;
    const RingElement mono(variety, Polynomial::monomial(variety->ring(), m));
    for (const auto& g : ideal_gens) {
      const RingElement target = mono * g;
      if (!products.contains(coordinates(target.rep()))) {
        report.containment_holds = false;
        report.first_missing = target;
        break;
      }
    }
  }
  report.is_compatible_at_bound = report.h_nondegenerate && report.containment_holds;
  return report;
}

}  // namespace lnd::denslab
