#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "lndlab/polyalg/polynomial.hpp"

namespace lnd::tame {

using polyalg::Coeff;
using polyalg::Polynomial;
using polyalg::Ring;

/// Polynomial endomorphism of affine space: x_i -> images[i].
struct PolyMap {
  Ring ring;
  std::vector<Polynomial> images;

  static PolyMap identity(const Ring& ring);
  /// Throws ArityMismatch / RingMismatch when images do not fit the ring.
  static PolyMap make(const Ring& ring, std::vector<Polynomial> images);
  /// Images separated by ';', e.g. "y; x + y^2".
  static PolyMap parse(const Ring& ring, std::string_view src);

  long degree() const;
  std::vector<std::complex<double>> eval(std::span<const std::complex<double>> point) const;
  std::string to_string() const;

  friend bool operator==(const PolyMap& a, const PolyMap& b) { return a.ring == b.ring && a.images == b.images; }
};

/// maps[0] o maps[1] o ... o maps[k-1]: the last map is applied first.
/// An empty list is not allowed.
PolyMap compose_maps(std::span<const PolyMap> maps);

}  // namespace lnd::tame
