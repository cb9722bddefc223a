#include "lndlab/fields/derivation.hpp"

#include "lndlab/errors.hpp"
#include "lndlab/polyalg/parser.hpp"

namespace lnd::fields {

namespace {

// Leibniz extension without the final reduction.
Polynomial leibniz(const Polynomial& f, const std::vector<Polynomial>& images) {
  Polynomial out(f.ring());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i].is_zero() || f.degree_in(i) <= 0) continue;
    out += polyalg::partial(f, i) * images[i];
  }
  return out;
}

}  // namespace

Derivation Derivation::zero(VarietyPtr variety) {
  std::vector<Polynomial> images(variety->arity(), Polynomial(variety->ring()));
  return Derivation(std::move(variety), std::move(images));
}

Polynomial Derivation::apply(const Polynomial& f) const {
  polyalg::require_same_ring(f.ring(), variety_->ring());
  return variety_->reduce(leibniz(f, images_));
}

RingElement Derivation::apply(const RingElement& f) const {
  require_same_variety(variety_, f.variety());
  return RingElement(variety_, apply(f.rep()));
}

RingElement Derivation::apply_power(const RingElement& f, unsigned k) const {
  RingElement g = f;
  for (unsigned i = 0; i < k && !g.is_zero(); ++i) g = apply(g);
  return g;
}

long Derivation::degree() const {
  long d = -1;
  for (const auto& img : images_) d = std::max(d, img.degree());
  return d;
}

bool Derivation::is_zero() const {
  for (const auto& img : images_) {
    if (!img.is_zero()) return false;
  }
  return true;
}

Derivation Derivation::scaled(const RingElement& f) const {
  require_same_variety(variety_, f.variety());
  std::vector<Polynomial> images;
  images.reserve(images_.size());
  for (const auto& img : images_) images.push_back(variety_->reduce(img * f.rep()));
  return Derivation(variety_, std::move(images));
}

Derivation Derivation::operator*(const Coeff& c) const {
  std::vector<Polynomial> images;
  for (const auto& img : images_) images.push_back(img * c);
  return Derivation(variety_, std::move(images));
}

Derivation Derivation::operator+(const Derivation& o) const {
  require_same_variety(variety_, o.variety_);
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < images_.size(); ++i) images.push_back(images_[i] + o.images_[i]);
  return Derivation(variety_, std::move(images));
}

Derivation Derivation::operator-(const Derivation& o) const {
  require_same_variety(variety_, o.variety_);
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < images_.size(); ++i) images.push_back(images_[i] - o.images_[i]);
  return Derivation(variety_, std::move(images));
}

std::vector<Coeff> Derivation::value_at(std::span<const Coeff> point) const {
  std::vector<Coeff> out;
  for (const auto& img : images_) out.push_back(polyalg::evaluate_exact(img, point));
  return out;
}

std::vector<std::complex<double>> Derivation::value_at(std::span<const std::complex<double>> point) const {
  std::vector<std::complex<double>> out;
  for (const auto& img : images_) out.push_back(polyalg::evaluate(img, point));
  return out;
}

std::string Derivation::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ", ";
    out += variety_->ring().var(i) + ": " + images_[i].to_string();
  }
  return out + "}";
}

Derivation make_derivation(VarietyPtr variety, std::vector<Polynomial> images) {
  if (images.size() != variety->arity()) throw ArityMismatch("derivation needs one image per ambient variable");
  for (auto& img : images) {
    polyalg::require_same_ring(img.ring(), variety->ring());
    img = variety->reduce(img);
  }
  for (const auto& q : variety->defining()) {
    Polynomial residue = variety->reduce(leibniz(q, images));
    if (!residue.is_zero()) throw TangencyError(q.to_string(), leibniz(q, images).to_string());
  }
  return Derivation(std::move(variety), std::move(images));
}

Derivation make_derivation(VarietyPtr variety, const std::vector<std::pair<std::string, std::string>>& images) {
  std::vector<Polynomial> polys(variety->arity(), Polynomial(variety->ring()));
  for (const auto& [name, src] : images) {
    polys[variety->ring().require_index(name)] = polyalg::parse_poly(src, variety->ring());
  }
  return make_derivation(std::move(variety), std::move(polys));
}

Derivation lie_bracket(const Derivation& d1, const Derivation& d2) {
  require_same_variety(d1.variety_, d2.variety_);
  std::vector<Polynomial> images;
  images.reserve(d1.images_.size());
  for (std::size_t i = 0; i < d1.images_.size(); ++i) {
    images.push_back(d1.apply(d2.images_[i]) - d2.apply(d1.images_[i]));
  }
  for (const auto& q : d1.variety_->defining()) {
    if (!d1.variety_->reduce(leibniz(q, images)).is_zero()) {
      throw InvariantFailure("bracket of tangent fields is not tangent on " + q.to_string());
    }
  }
  return Derivation(d1.variety_, std::move(images));
}

}  // namespace lnd::fields
