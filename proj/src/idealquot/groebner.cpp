#include "lndlab/idealquot/groebner.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "lndlab/errors.hpp"

namespace lnd::idealquot {

using polyalg::mono_coprime;
using polyalg::mono_div;
using polyalg::mono_divides;
using polyalg::mono_lcm;

namespace {

using Work = std::map<Monomial, Coeff, OrderDescending>;

Polynomial make_monic(const Polynomial& f, const MonomialOrder& order) {
  Coeff lc = leading_term(f, order).coeff;
  if (lc.is_one()) return f;
  return f * lc.inverse();
}

// Divides f by the polynomials in `basis` (leads precomputed), returning the
// full remainder. Works on an order-sorted map so the lead is always begin().
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis, std::span<const Monomial> leads,
                  std::span<const Coeff> lead_coeffs, const MonomialOrder& order) {
  Work work{OrderDescending{&order}};
  for (const auto& [m, c] : f.terms()) work.emplace(m, c);
  Polynomial remainder(f.ring());
  while (!work.empty()) {
    auto lead = work.begin();
    std::size_t hit = basis.size();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (mono_divides(leads[i], lead->first)) {
        hit = i;
        break;
      }
    }
    if (hit == basis.size()) {
      remainder.add_term(lead->first, lead->second);
      work.erase(lead);
      continue;
    }
    const Monomial shift = mono_div(lead->first, leads[hit]);
    const Coeff factor = lead->second / lead_coeffs[hit];
    for (const auto& [gm, gc] : basis[hit].terms()) {
      Monomial m = polyalg::mono_mul(gm, shift);
      Coeff delta = -(factor * gc);
      auto [it, inserted] = work.try_emplace(std::move(m), delta);
      if (!inserted) {
        it->second += delta;
        if (it->second.is_zero()) work.erase(it);
      }
    }
  }
  return remainder;
}

struct Reducer {
  std::vector<Polynomial> polys;
  std::vector<Monomial> leads;
  std::vector<Coeff> lcs;
  const MonomialOrder* order;

  void add(const Polynomial& p) {
    Term t = leading_term(p, *order);
    polys.push_back(p);
    leads.push_back(std::move(t.mono));
    lcs.push_back(std::move(t.coeff));
  }

  Polynomial nf(const Polynomial& f) const { return reduce(f, polys, leads, lcs, *order); }
};

Polynomial s_polynomial(const Polynomial& f, const Term& lf, const Polynomial& g, const Term& lg) {
  const Monomial l = mono_lcm(lf.mono, lg.mono);
  return polyalg::scale_shift(f, lf.coeff.inverse(), mono_div(l, lf.mono)) -
         polyalg::scale_shift(g, lg.coeff.inverse(), mono_div(l, lg.mono));
}

}  // namespace

GroebnerBasis::GroebnerBasis(Ring ring, MonomialOrder order, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), order_(std::move(order)), gens_(std::move(gens)) {
  for (const auto& g : gens_) {
    polyalg::require_same_ring(g.ring(), ring_);
    leads_.push_back(leading_term(g, order_).mono);
  }
}

bool GroebnerBasis::is_unit_ideal() const {
  return gens_.size() == 1 && gens_.front().is_constant() && !gens_.front().is_zero();
}

bool GroebnerBasis::is_standard(const Monomial& m) const {
  return std::none_of(leads_.begin(), leads_.end(), [&](const Monomial& l) { return mono_divides(l, m); });
}

GroebnerBasis GroebnerBasis::lifted(const Ring& target) const {
  if (target.arity() < ring_.arity()) throw RingMismatch("lift target is smaller than the ring");
  for (std::size_t i = 0; i < ring_.arity(); ++i) {
    if (target.var(i) != ring_.var(i)) throw RingMismatch("lift target must extend the ring");
  }
  std::vector<Polynomial> gens;
  for (const auto& g : gens_) gens.push_back(polyalg::embed(g, target));
  return GroebnerBasis(target, order_.extended(target.arity() - ring_.arity()), std::move(gens));
}

GroebnerBasis groebner(std::span<const Polynomial> input, const MonomialOrder& order) {
  if (input.empty()) throw std::invalid_argument("groebner needs at least one generator");
  const Ring ring = input.front().ring();
  for (const auto& g : input) polyalg::require_same_ring(g.ring(), ring);

  Reducer basis{{}, {}, {}, &order};
  for (const auto& g : input) {
    if (g.is_zero()) continue;
    Polynomial r = basis.polys.empty() ? g : basis.nf(g);
    if (!r.is_zero()) basis.add(make_monic(r, order));
  }

  // Pairs (i, j) with i < j still to be processed.
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < basis.polys.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace(i, j);
  }

  auto pair_lcm = [&](const std::pair<std::size_t, std::size_t>& p) {
    return mono_lcm(basis.leads[p.first], basis.leads[p.second]);
  };
  auto pending = [&](std::size_t a, std::size_t b) { return pairs.count({std::min(a, b), std::max(a, b)}) > 0; };

  while (!pairs.empty()) {
    // Normal selection strategy: smallest lcm first.
    auto pick = pairs.begin();
    Monomial best = pair_lcm(*pick);
    for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
      Monomial l = pair_lcm(*it);
      if (order.compare(l, best) < 0) {
        best = std::move(l);
        pick = it;
      }
    }
    const auto [i, j] = *pick;
    pairs.erase(pick);

    if (mono_coprime(basis.leads[i], basis.leads[j])) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.polys.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      chain = mono_divides(basis.leads[k], best) && !pending(i, k) && !pending(j, k);
    }
    if (chain) continue;

    Polynomial s = s_polynomial(basis.polys[i], {basis.leads[i], basis.lcs[i]}, basis.polys[j],
                                {basis.leads[j], basis.lcs[j]});
    Polynomial r = basis.nf(s);
    if (r.is_zero()) continue;
    basis.add(make_monic(r, order));
    const std::size_t n = basis.polys.size() - 1;
    for (std::size_t k = 0; k < n; ++k) pairs.emplace(k, n);
  }

  // Inter-reduction: drop generators whose lead is divisible by another lead,
  // then reduce each survivor by the rest.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < basis.polys.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.polys.size() && !redundant; ++j) {
      if (i == j || !mono_divides(basis.leads[j], basis.leads[i])) continue;
      redundant = basis.leads[j] != basis.leads[i] || j < i;
    }
    if (!redundant) keep.push_back(i);
  }
  std::vector<Polynomial> reduced;
  for (std::size_t i : keep) {
    Reducer others{{}, {}, {}, &order};
    for (std::size_t j : keep) {
      if (j != i) others.add(basis.polys[j]);
    }
    const Term lt = leading_term(basis.polys[i], order);
    Polynomial tail = basis.polys[i] - Polynomial::monomial(ring, lt.mono, lt.coeff);
    Polynomial r = Polynomial::monomial(ring, lt.mono, lt.coeff) + others.nf(tail);
    reduced.push_back(make_monic(r, order));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(leading_term(a, order).mono, leading_term(b, order).mono) > 0;
  });
  return GroebnerBasis(ring, order, std::move(reduced));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  polyalg::require_same_ring(f.ring(), gb.ring());
  if (f.is_zero() || gb.is_zero_ideal()) return f;
  std::vector<Coeff> lcs(gb.gens().size(), Coeff(1));
  return reduce(f, gb.gens(), gb.leading_monomials(), lcs, gb.order());
}

bool in_ideal(const Polynomial& f, const GroebnerBasis& gb) { return normal_form(f, gb).is_zero(); }

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, long max_degree) {
  std::vector<Monomial> out;
  if (max_degree < 0) return out;
  const std::size_t n = gb.ring().arity();
  Monomial m(n, 0);
  // Enumerate exponent vectors of total degree <= max_degree.
  std::function<void(std::size_t, long)> rec = [&](std::size_t var, long budget) {
    if (var == n) {
      if (gb.is_standard(m)) out.push_back(m);
      return;
    }
    for (long e = 0; e <= budget; ++e) {
      m[var] = static_cast<std::uint32_t>(e);
      rec(var + 1, budget - e);
    }
    m[var] = 0;
  };
  rec(0, max_degree);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return polyalg::grevlex_compare(a, b) < 0;
  });
  return out;
}

}  // namespace lnd::idealquot
