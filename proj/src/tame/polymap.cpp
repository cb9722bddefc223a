#include "lndlab/tame/polymap.hpp"

#include <sstream>

#include "lndlab/errors.hpp"
#include "lndlab/polyalg/parser.hpp"

namespace lnd::tame {

PolyMap PolyMap::identity(const Ring& ring) {
  PolyMap m{ring, {}};
  for (std::size_t i = 0; i < ring.arity(); ++i) m.images.push_back(Polynomial::variable(ring, i));
  return m;
}

PolyMap PolyMap::make(const Ring& ring, std::vector<Polynomial> images) {
  if (images.size() != ring.arity()) throw ArityMismatch("map needs one image per variable");
  for (const auto& img : images) polyalg::require_same_ring(img.ring(), ring);
  return PolyMap{ring, std::move(images)};
}

PolyMap PolyMap::parse(const Ring& ring, std::string_view src) {
  std::vector<Polynomial> images;
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = src.find(';', start);
    images.push_back(polyalg::parse_poly(src.substr(start, end == std::string_view::npos ? end : end - start), ring));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return make(ring, std::move(images));
}

long PolyMap::degree() const {
  long d = -1;
  for (const auto& img : images) d = std::max(d, img.degree());
  return d;
}

std::vector<std::complex<double>> PolyMap::eval(std::span<const std::complex<double>> point) const {
  std::vector<std::complex<double>> out;
  out.reserve(images.size());
  for (const auto& img : images) out.push_back(polyalg::evaluate(img, point));
  return out;
}

std::string PolyMap::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i) out += ", ";
    out += images[i].to_string();
  }
  return out + ")";
}

PolyMap compose_maps(std::span<const PolyMap> maps) {
  if (maps.empty()) throw std::invalid_argument("compose_maps needs at least one map");
  PolyMap acc = maps.back();
  for (std::size_t k = maps.size() - 1; k-- > 0;) {
    const PolyMap& outer = maps[k];
    if (outer.ring.arity() != acc.images.size()) throw ArityMismatch("composition arity mismatch");
    PolyMap next{acc.ring, {}};
    for (const auto& img : outer.images) next.images.push_back(polyalg::substitute(img, std::span<const Polynomial>(acc.images)));
    acc = std::move(next);
  }
  return acc;
}

}  // namespace lnd::tame
