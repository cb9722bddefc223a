#include "lndlab/tame/jvdk.hpp"

#include "lndlab/errors.hpp"

namespace lnd::tame {

using polyalg::Monomial;

namespace {

AffineFactor diag(const Coeff& a, const Coeff& b) {
  AffineFactor f = AffineFactor::identity();
  f.matrix[0][0] = a;
  f.matrix[1][1] = b;
  return f;
}

// a o b as affine maps.
AffineFactor compose(const AffineFactor& a, const AffineFactor& b) {
  AffineFactor r;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) r.matrix[i][j] = a.matrix[i][0] * b.matrix[0][j] + a.matrix[i][1] * b.matrix[1][j];
    r.translation[i] = a.matrix[i][0] * b.translation[0] + a.matrix[i][1] * b.translation[1] + a.translation[i];
  }
  return r;
}

// Reads an affine map of degree <= 1 into matrix form.
AffineFactor read_affine(const PolyMap& m) {
  AffineFactor f;
  for (int i = 0; i < 2; ++i) {
    const auto& img = m.images[i];
    f.matrix[i][0] = img.coefficient(Monomial{1, 0});
    f.matrix[i][1] = img.coefficient(Monomial{0, 1});
    f.translation[i] = img.constant_term();
  }
  return f;
}

// Merges neighbours: affine*affine and same-axis elementary factors.
std::vector<Factor> merge(const std::vector<Factor>& in) {
  std::vector<Factor> out;
  for (const auto& f : in) {
    if (!out.empty()) {
      if (auto* prev = std::get_if<AffineFactor>(&out.back()); prev && std::holds_alternative<AffineFactor>(f)) {
        *prev = compose(*prev, std::get<AffineFactor>(f));
        continue;
      }
      auto* pe = std::get_if<ElementaryFactor>(&out.back());
      const auto* fe = std::get_if<ElementaryFactor>(&f);
      if (pe && fe && pe->axis == fe->axis) {
        pe->added += fe->added;
        continue;
      }
    }
    out.push_back(f);
  }
  std::vector<Factor> cleaned;
  for (auto& f : out) {
    if (const auto* a = std::get_if<AffineFactor>(&f); a && a->is_identity()) continue;
    if (const auto* e = std::get_if<ElementaryFactor>(&f); e && e->added.is_zero()) continue;
    cleaned.push_back(std::move(f));
  }
  return cleaned;
}

// Rewrites every elementary factor e (leading coefficient c) as s o e' o s^-1
// with s scaling e's axis coordinate by c and e' monic.
std::vector<Factor> normalize(const std::vector<Factor>& in) {
  std::vector<Factor> out;
  for (const auto& f : in) {
    const auto* e = std::get_if<ElementaryFactor>(&f);
    if (!e) {
      out.push_back(f);
      continue;
    }
    const Coeff c = polyalg::homogeneous_part(e->added, e->added.degree()).terms().begin()->second;
    if (c.is_one()) {
      out.push_back(f);
      continue;
    }
    const AffineFactor s = e->axis == 1 ? diag(c, 1) : diag(1, c);
    const AffineFactor s_inv = e->axis == 1 ? diag(c.inverse(), 1) : diag(1, c.inverse());
    out.push_back(s);
    out.push_back(ElementaryFactor{e->axis, e->added * c.inverse()});
    out.push_back(s_inv);
  }
  return merge(out);
}

}  // namespace

AffineFactor AffineFactor::identity() {
  AffineFactor f;
  f.matrix[0][0] = 1;
  f.matrix[1][1] = 1;
  return f;
}

bool AffineFactor::is_identity() const {
  return matrix[0][0].is_one() && matrix[1][1].is_one() && matrix[0][1].is_zero() && matrix[1][0].is_zero() &&
         translation[0].is_zero() && translation[1].is_zero();
}

Coeff AffineFactor::determinant() const { return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]; }

PolyMap factor_map(const Ring& ring, const Factor& f) {
  const Polynomial x = Polynomial::variable(ring, 0);
  const Polynomial y = Polynomial::variable(ring, 1);
  if (const auto* a = std::get_if<AffineFactor>(&f)) {
    std::vector<Polynomial> images;
    for (int i = 0; i < 2; ++i) {
      images.push_back(x * a->matrix[i][0] + y * a->matrix[i][1] + Polynomial::constant(ring, a->translation[i]));
    }
    return PolyMap::make(ring, std::move(images));
  }
  const auto& e = std::get<ElementaryFactor>(f);
  if (e.axis == 1) return PolyMap::make(ring, {x + e.added, y});
  return PolyMap::make(ring, {x, y + e.added});
}

PolyMap recompose(const FactorList& list) {
  if (list.factors.empty()) return PolyMap::identity(list.ring);
  std::vector<PolyMap> maps;
  for (const auto& f : list.factors) maps.push_back(factor_map(list.ring, f));
  return compose_maps(maps);
}

DecomposeResult jvdk_decompose(const PolyMap& map, int max_steps) {
  if (map.ring.arity() != 2 || map.images.size() != 2) throw ArityMismatch("decomposition needs a plane map");
  const Ring& ring = map.ring;
  DecomposeResult result;
  std::vector<Factor> left;  // map = left[0] o left[1] o ... o current
  PolyMap current = map;

  auto inconclusive = [&](std::string why) {
    result.reason = std::move(why);
    return result;
  };

  while (current.degree() > 1) {
    if (result.steps >= max_steps) return inconclusive("step limit reached");
    const long d1 = current.images[0].degree();
    const long d2 = current.images[1].degree();
    if (d1 < 1 || d2 < 1) return inconclusive("a component is constant");
    // Peel from the higher-degree component (component 2 on ties).
    const std::size_t hi = d2 >= d1 ? 1 : 0;
    const std::size_t lo = 1 - hi;
    const long dh = std::max(d1, d2);
    const long dl = std::min(d1, d2);
    if (dh % dl != 0) return inconclusive("component degrees do not divide");
    const auto k = static_cast<std::uint32_t>(dh / dl);
    const Polynomial top_hi = polyalg::homogeneous_part(current.images[hi], dh);
    const Polynomial power = polyalg::pow(polyalg::homogeneous_part(current.images[lo], dl), k);
    const auto& lead_hi = *top_hi.terms().begin();
    const Coeff denom = power.coefficient(lead_hi.first);
    if (denom.is_zero()) return inconclusive("leading forms are not proportional powers");
    const Coeff c = lead_hi.second / denom;
    if (!(top_hi == power * c)) return inconclusive("leading forms are not proportional powers");
    // current = e o current', e adds c*w^k to the hi coordinate.
    const Polynomial other = Polynomial::variable(ring, lo);
    const Polynomial added = polyalg::pow(other, k) * c;
    if (k == 1) {
      AffineFactor a = AffineFactor::identity();
      a.matrix[hi][lo] = c;
      left.emplace_back(a);
    } else {
      left.emplace_back(ElementaryFactor{static_cast<int>(hi) + 1, added});
    }
    current.images[hi] = current.images[hi] - polyalg::pow(current.images[lo], k) * c;
    ++result.steps;
  }

  if (current.degree() < 1) return inconclusive("map is constant");
  const AffineFactor tail = read_affine(current);
  if (tail.determinant().is_zero()) return inconclusive("affine part is singular");
  left.emplace_back(tail);

  FactorList list{ring, normalize(merge(left))};
  if (!(recompose(list) == map)) throw InvariantFailure("decomposition does not recompose to the input map");
  result.factors = std::move(list);
  return result;
}

}  // namespace lnd::tame
