#include "lndlab/denslab/kernel.hpp"

#include <map>

#include "lndlab/denslab/linalg.hpp"

namespace lnd::denslab {

using polyalg::Monomial;
using polyalg::Polynomial;

std::vector<RingElement> kernel_basis(const Derivation& d, unsigned power, long deg_bound) {
  const auto& variety = d.variety();
  const auto basis = variety->monomial_basis(deg_bound);

  std::vector<Polynomial> images;
  std::map<Monomial, std::size_t, polyalg::GrevlexDescending> row_of;
  for (const auto& m : basis) {
    RingElement g(variety, Polynomial::monomial(variety->ring(), m));
    images.push_back(d.apply_power(g, power).rep());
    for (const auto& [im, c] : images.back().terms()) row_of.try_emplace(im, row_of.size());
  }

  Matrix a(row_of.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (const auto& [im, c] : images[j].terms()) a.at(row_of.at(im), j) = c;
  }

  std::vector<RingElement> out;
  for (const auto& v : nullspace(a)) {
    Polynomial f(variety->ring());
    for (std::size_t j = 0; j < basis.size(); ++j) f.add_term(basis[j], v[j]);
    out.emplace_back(variety, f);
  }
  return out;
}

}  // namespace lnd::denslab
