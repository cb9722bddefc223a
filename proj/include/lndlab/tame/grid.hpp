#pragma once

#include <complex>
#include <variant>

#include "lndlab/fields/flow.hpp"
#include "lndlab/tame/polymap.hpp"

namespace lnd::tame {

/// A flow frozen at one (complex) time.
struct TimedFlow {
  fields::FlowMap flow;
  std::complex<double> time;
};

using MapSource = std::variant<PolyMap, TimedFlow>;

std::size_t source_arity(const MapSource& m);
std::vector<std::complex<double>> eval_source(const MapSource& m, std::span<const std::complex<double>> point);

/// Real grid center + [-radius, radius]^n with `samples` points per axis.
struct Grid {
  double center = 0.0;
  double radius = 1.0;
  int samples = 5;
};

/// Max over grid points of the max-norm difference of the two images.
/// Points are evaluated in parallel. Throws ArityMismatch.
double compare_on_grid(const MapSource& f, const MapSource& g, const Grid& grid);

}  // namespace lnd::tame
