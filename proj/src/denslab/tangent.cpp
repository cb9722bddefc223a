#include "lndlab/denslab/tangent.hpp"

#include <algorithm>

#include "lndlab/errors.hpp"

namespace lnd::denslab {

using polyalg::Polynomial;

std::vector<Vec> tangent_basis(const AffineVariety& x, std::span<const Coeff> point) {
  if (point.size() != x.arity()) throw ArityMismatch("point arity differs from ambient dimension");
  if (!x.contains_point(point)) throw PointNotOnVariety("point does not satisfy the defining equations");
  const std::size_t n = x.arity();
  if (x.defining().empty()) {
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < n; ++i) {
      Vec e(n);
      e[i] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  Matrix jac(x.defining().size(), n);
  for (std::size_t r = 0; r < x.defining().size(); ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      jac.at(r, c) = polyalg::evaluate_exact(polyalg::partial(x.defining()[r], c), point);
    }
  }
  return nullspace(jac);
}

FlexReport flexible_at(const AffineVariety& x, std::span<const Lnd> lnds, std::span<const Coeff> point) {
  FlexReport report;
  report.point.assign(point.begin(), point.end());
  report.tangent_dim = tangent_basis(x, point).size();
  for (const auto& d : lnds) {
    if (!d.variety()->same_as(x)) throw VarietyMismatch("LND lives on a different variety");
    report.lnd_values.push_back(d.derivation().value_at(point));
  }
  report.rank = report.lnd_values.empty() ? 0 : rank(Matrix::from_rows(report.lnd_values, x.arity()));
  if (report.rank > report.tangent_dim) {
    throw InvariantFailure("LND values exceed the tangent space; tangency is broken");
  }
  report.spans = report.rank == report.tangent_dim;
  return report;
}

std::vector<Coeff> random_point(const AffineVariety& x, std::mt19937_64& rng, long max_abs) {
  const std::size_t n = x.arity();
  std::uniform_int_distribution<long> num(-2 * max_abs, 2 * max_abs);
  auto draw = [&] { return Coeff::fraction(num(rng), 2); };

  if (x.defining().empty()) {
    std::vector<Coeff> p;
    for (std::size_t i = 0; i < n; ++i) p.push_back(draw());
    return p;
  }
  if (x.defining().size() != 1) throw std::invalid_argument("random points need affine space or a hypersurface");
  const Polynomial& q = x.defining().front();

  // Prefer the last variable in which q is linear.
  std::size_t solve = n;
  for (std::size_t i = n; i-- > 0;) {
    if (q.degree_in(i) == 1) {
      solve = i;
      break;
    }
  }
  if (solve == n) throw std::invalid_argument("hypersurface is not linear in any variable");

  // q = A * x_solve + B with A, B free of x_solve.
  Polynomial a(q.ring());
  Polynomial b(q.ring());
  for (const auto& [m, c] : q.terms()) {
    if (m[solve] == 1) {
      auto r = m;
      r[solve] = 0;
      a.add_term(r, c);
    } else {
      b.add_term(m, c);
    }
  }
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Coeff> p;
    for (std::size_t i = 0; i < n; ++i) p.push_back(i == solve ? Coeff() : draw());
    const Coeff av = polyalg::evaluate_exact(a, p);
    if (av.is_zero()) continue;
    p[solve] = -polyalg::evaluate_exact(b, p) / av;
    if (!x.contains_point(p)) throw InvariantFailure("solved point is not on the variety");
    return p;
  }
  throw std::runtime_error("could not find a random point with nonzero leading coefficient");
}

}  // namespace lnd::denslab
