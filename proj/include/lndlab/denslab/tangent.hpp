#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "lndlab/denslab/linalg.hpp"
#include "lndlab/fields/lnd.hpp"

namespace lnd::denslab {

using fields::AffineVariety;
using fields::Lnd;
using fields::VarietyPtr;

/// Basis of the kernel of the Jacobian of the defining polynomials at an
/// exact point. Throws PointNotOnVariety.
std::vector<Vec> tangent_basis(const AffineVariety& x, std::span<const Coeff> point);

struct FlexReport {
  std::vector<Coeff> point;
  std::vector<Vec> lnd_values;  // one row per LND
  std::size_t tangent_dim = 0;
  std::size_t rank = 0;
  bool spans = false;
};

/// Rank of the LND values at the point against the tangent dimension.
FlexReport flexible_at(const AffineVariety& x, std::span<const Lnd> lnds, std::span<const Coeff> point);

/// Exact random point with small rational coordinates. Affine space: any
/// point. A hypersurface: solves for a variable in which the equation is
/// linear. Throws std::invalid_argument when neither applies.
std::vector<Coeff> random_point(const AffineVariety& x, std::mt19937_64& rng, long max_abs = 3);

}  // namespace lnd::denslab
