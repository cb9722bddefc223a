#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lndlab/idealquot/groebner.hpp"

namespace lnd::fields {

using idealquot::GroebnerBasis;
using idealquot::MonomialOrder;
using polyalg::Coeff;
using polyalg::Monomial;
using polyalg::Polynomial;
using polyalg::Ring;

/// Names reserved for formal flow times; rejected as variety variables.
inline constexpr const char* kTimeVar = "t";
inline constexpr const char* kAltTimeVar = "s";

class AffineVariety;
using VarietyPtr = std::shared_ptr<const AffineVariety>;

/// Closed subvariety of affine space given by defining polynomials, with its
/// Gröbner basis cached. An empty defining list is affine space itself.
class AffineVariety {
 public:
  /// Default order: grevlex on the declared variable order.
  static VarietyPtr create(std::string name, Ring ring, std::vector<Polynomial> defining,
                           std::optional<MonomialOrder> order = std::nullopt);

  const std::string& name() const noexcept { return name_; }
  const Ring& ring() const noexcept { return ring_; }
  std::size_t arity() const noexcept { return ring_.arity(); }
  const std::vector<Polynomial>& defining() const noexcept { return defining_; }
  const GroebnerBasis& gb() const noexcept { return gb_; }

  Polynomial reduce(const Polynomial& f) const;
  bool contains_point(std::span<const Coeff> point) const;
  /// Standard monomials of degree <= d: a basis of the degree-filtered piece of C[X].
  std::vector<Monomial> monomial_basis(long max_degree) const;

  Polynomial parse(std::string_view src) const;

  /// Same ring, same ideal basis.
  bool same_as(const AffineVariety& other) const { return this == &other || gb_ == other.gb_; }

 private:
  AffineVariety(std::string name, Ring ring, std::vector<Polynomial> defining, GroebnerBasis gb)
      : name_(std::move(name)), ring_(std::move(ring)), defining_(std::move(defining)), gb_(std::move(gb)) {}

  std::string name_;
  Ring ring_;
  std::vector<Polynomial> defining_;
  GroebnerBasis gb_;
};

/// Throws VarietyMismatch.
void require_same_variety(const VarietyPtr& a, const VarietyPtr& b);

/// Element of the coordinate ring C[X], held as its normal form.
class RingElement {
 public:
  RingElement(VarietyPtr variety, const Polynomial& rep);
  static RingElement constant(VarietyPtr variety, const Coeff& c);

  const VarietyPtr& variety() const noexcept { return variety_; }
  const Polynomial& rep() const noexcept { return rep_; }
  bool is_zero() const noexcept { return rep_.is_zero(); }
  bool is_constant() const noexcept { return rep_.is_constant(); }
  long degree() const { return rep_.degree(); }

  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const Coeff& c, const RingElement& a);
  friend bool operator==(const RingElement& a, const RingElement& b) { return a.rep_ == b.rep_; }

  std::string to_string() const { return rep_.to_string(); }

 private:
  VarietyPtr variety_;
  Polynomial rep_;
};

}  // namespace lnd::fields
