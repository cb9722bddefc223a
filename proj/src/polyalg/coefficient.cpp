#include "lndlab/polyalg/coefficient.hpp"

#include <stdexcept>

namespace lnd::polyalg {

Coeff::Coeff(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Coeff Coeff::fraction(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Coeff(q);
}

Coeff Coeff::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero coefficient");
  mpq_class norm = re_ * re_ + im_ * im_;
  return Coeff(re_ / norm, -im_ / norm);
}

Coeff& Coeff::operator+=(const Coeff& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Coeff& Coeff::operator-=(const Coeff& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Coeff& Coeff::operator*=(const Coeff& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

namespace {

std::string imaginary_part(const mpq_class& im) {
  if (im == 1) return "I";
  if (im == -1) return "-I";
  return im.get_str() + "*I";
}

}  // namespace

std::string Coeff::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  if (sgn(re_) == 0) return imaginary_part(im_);
  std::string out = "(" + re_.get_str();
  if (sgn(im_) > 0) {
    out += " + " + imaginary_part(im_);
  } else {
    out += " - " + imaginary_part(-im_);
  }
  return out + ")";
}

}  // namespace lnd::polyalg
