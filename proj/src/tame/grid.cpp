#include "lndlab/tame/grid.hpp"

#include <algorithm>
#include <cmath>

#include "lndlab/errors.hpp"
#include "lndlab/util/parallel.hpp"

namespace lnd::tame {

std::size_t source_arity(const MapSource& m) {
  if (const auto* p = std::get_if<PolyMap>(&m)) return p->ring.arity();
  return fields::flow_variety(std::get<TimedFlow>(m).flow)->arity();
}

std::vector<std::complex<double>> eval_source(const MapSource& m, std::span<const std::complex<double>> point) {
  if (const auto* p = std::get_if<PolyMap>(&m)) return p->eval(point);
  const auto& tf = std::get<TimedFlow>(m);
  return fields::eval_flow(tf.flow, tf.time, point);
}

double compare_on_grid(const MapSource& f, const MapSource& g, const Grid& grid) {
  const std::size_t n = source_arity(f);
  if (n != source_arity(g)) throw ArityMismatch("compared maps have different arities");
  if (grid.samples < 1) throw std::invalid_argument("grid needs at least one sample per axis");
  const auto samples = static_cast<std::size_t>(grid.samples);
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= samples;

  auto coord = [&](std::size_t k) {
    if (samples == 1) return grid.center;
    return grid.center - grid.radius + 2.0 * grid.radius * static_cast<double>(k) / static_cast<double>(samples - 1);
  };

  std::vector<double> deviation(total, 0.0);
  util::parallel_for(total, [&](std::size_t idx) {
    std::vector<std::complex<double>> p(n);
    std::size_t rest = idx;
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = coord(rest % samples);
      rest /= samples;
    }
    const auto a = eval_source(f, p);
    const auto b = eval_source(g, p);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    deviation[idx] = worst;
  });
  return deviation.empty() ? 0.0 : *std::max_element(deviation.begin(), deviation.end());
}

}  // namespace lnd::tame
