#pragma once

#include <span>
#include <string>
#include <vector>

#include "lndlab/fields/variety.hpp"

namespace lnd::fields {

/// Algebraic vector field on X: one image per ambient coordinate, stored as
/// normal forms. Construction through `make_derivation` enforces tangency,
/// i.e. D(q) lies in the ideal for every defining polynomial q.
class Derivation {
 public:
  static Derivation zero(VarietyPtr variety);

  const VarietyPtr& variety() const noexcept { return variety_; }
  const std::vector<Polynomial>& images() const noexcept { return images_; }
  const Polynomial& image(std::size_t i) const { return images_.at(i); }

  /// Leibniz extension applied to an ambient polynomial, reduced to normal form.
  Polynomial apply(const Polynomial& f) const;
  RingElement apply(const RingElement& f) const;
  /// D^k(f).
  RingElement apply_power(const RingElement& f, unsigned k) const;

  /// Max total degree of the images; -1 for the zero field.
  long degree() const;
  bool is_zero() const;

  /// f * D.
  Derivation scaled(const RingElement& f) const;
  Derivation operator*(const Coeff& c) const;
  Derivation operator+(const Derivation& o) const;
  Derivation operator-(const Derivation& o) const;
  friend bool operator==(const Derivation& a, const Derivation& b) { return a.images_ == b.images_; }

  /// Evaluates the image vector at an exact point.
  std::vector<Coeff> value_at(std::span<const Coeff> point) const;
  std::vector<std::complex<double>> value_at(std::span<const std::complex<double>> point) const;

  /// `{x: <poly>, y: <poly>}` rendering.
  std::string to_string() const;

 private:
  friend Derivation make_derivation(VarietyPtr, std::vector<Polynomial>);
  friend Derivation lie_bracket(const Derivation&, const Derivation&);
  Derivation(VarietyPtr variety, std::vector<Polynomial> images)
      : variety_(std::move(variety)), images_(std::move(images)) {}

  VarietyPtr variety_;
  std::vector<Polynomial> images_;
};

/// Throws ArityMismatch or TangencyError (naming the offending defining polynomial).
Derivation make_derivation(VarietyPtr variety, std::vector<Polynomial> images);

/// Parses images given per variable name; missing names map to 0.
Derivation make_derivation(VarietyPtr variety, const std::vector<std::pair<std::string, std::string>>& images);

/// [D1, D2](x_i) = D1(D2(x_i)) - D2(D1(x_i)).
Derivation lie_bracket(const Derivation& d1, const Derivation& d2);

}  // namespace lnd::fields
