#include "lndlab/denslab/saturate.hpp"

#include <map>
#include <tuple>

#include "lndlab/denslab/kernel.hpp"
#include "lndlab/denslab/linalg.hpp"
#include "lndlab/errors.hpp"
#include "lndlab/util/parallel.hpp"

namespace lnd::denslab {

using polyalg::Coeff;
using polyalg::Monomial;
using polyalg::Polynomial;

namespace {

// Coordinate of a vector field: (degree of monomial, variable, monomial).
// Ordered so that higher-degree coordinates lead.
struct FieldCoord {
  long degree;
  std::size_t var;
  Monomial mono;
};

struct FieldCoordGreater {
  bool operator()(const FieldCoord& a, const FieldCoord& b) const {
    if (a.degree != b.degree) return a.degree > b.degree;
    if (a.var != b.var) return a.var < b.var;
    return polyalg::grevlex_compare(a.mono, b.mono) > 0;
  }
};

using Span = EchelonSpan<FieldCoord, FieldCoordGreater>;

Span::Vector coordinates(const Derivation& d) {
  Span::Vector v;
  for (std::size_t i = 0; i < d.images().size(); ++i) {
    for (const auto& [m, c] : d.image(i).terms()) {
      v.emplace(FieldCoord{static_cast<long>(polyalg::total_degree(m)), i, m}, c);
    }
  }
  return v;
}

Derivation from_coordinates(const Span::Vector& v, const fields::VarietyPtr& variety) {
  std::vector<Polynomial> images(variety->arity(), Polynomial(variety->ring()));
  for (const auto& [k, c] : v) images[k.var].add_term(k.mono, c);
  return fields::make_derivation(variety, std::move(images));
}

}  // namespace

std::string LieWord::render() const {
  std::string out;
  for (std::size_t k = 0; k + 1 < letters.size(); ++k) out += "[g" + std::to_string(letters[k]) + ", ";
  out += "g" + std::to_string(letters.back());
  out += std::string(letters.size() - 1, ']');
  return out;
}

std::size_t tangent_field_dim(const fields::AffineVariety& x, long deg) {
  const auto basis = x.monomial_basis(deg);
  const std::size_t n = x.arity();
  const std::size_t unknowns = n * basis.size();
  if (x.defining().empty()) return unknowns;

  // Column (i, m): normal form of dq/dx_i * m for every defining q.
  std::map<std::pair<std::size_t, Monomial>, std::size_t> row_of;
  std::vector<std::vector<std::pair<std::size_t, Coeff>>> columns;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& m : basis) {
      std::vector<std::pair<std::size_t, Coeff>> col;
      const Polynomial mono = Polynomial::monomial(x.ring(), m);
      for (std::size_t q = 0; q < x.defining().size(); ++q) {
        Polynomial img = x.reduce(polyalg::partial(x.defining()[q], i) * mono);
        for (const auto& [im, c] : img.terms()) {
          auto [it, inserted] = row_of.try_emplace({q, im}, row_of.size());
          col.emplace_back(it->second, c);
        }
      }
      columns.push_back(std::move(col));
    }
  }
  Matrix a(row_of.size(), unknowns);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (const auto& [r, c] : columns[j]) a.at(r, j) = c;
  }
  return unknowns - rank(a);
}

std::vector<OvershearField> overshear_generators(std::span<const fields::Lnd> lnds,
                                                 std::span<const std::string> names, long mult_deg) {
  std::vector<OvershearField> out;
  for (std::size_t k = 0; k < lnds.size(); ++k) {
    const std::string base = k < names.size() ? names[k] : "D" + std::to_string(k);
    for (const auto& f : kernel_basis(lnds[k].derivation(), 2, mult_deg)) {
      out.push_back(fields::make_overshear(lnds[k], f).with_label("(" + f.to_string() + ")*" + base));
    }
  }
  return out;
}

Derivation evaluate_word(const LieWord& word, std::span<const OvershearField> gens) {
  Derivation acc = gens[word.letters.back()].field();
  for (std::size_t k = word.letters.size() - 1; k-- > 0;) acc = fields::lie_bracket(gens[word.letters[k]].field(), acc);
  return acc;
}

SaturationReport lie_saturate(std::span<const OvershearField> gens, long target_deg, long work_deg, int max_len) {
  if (work_deg < target_deg) throw PreconditionViolation("work_deg must be >= target_deg");
  if (max_len < 1) throw PreconditionViolation("max_len must be >= 1");
  SaturationReport report;
  report.target_deg = target_deg;
  report.work_deg = work_deg;
  report.max_len = max_len;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    report.generators.push_back(gens[k].label().empty() ? gens[k].field().to_string() : gens[k].label());
  }
  if (gens.empty()) return report;

  const auto variety = gens.front().variety();
  for (const auto& g : gens) fields::require_same_variety(variety, g.variety());
  report.target_dim = tangent_field_dim(*variety, target_deg);

  std::vector<Derivation> gen_fields;
  for (const auto& g : gens) gen_fields.push_back(g.field());

  Span span;
  std::vector<Derivation> word_fields;
  // Words of the current length whose fields were independent; brackets extend these.
  std::vector<std::size_t> frontier;

  auto offer = [&](LieWord word, const Derivation& field) {
    ++report.brackets_computed;
    if (field.is_zero() || field.degree() > work_deg) {
      ++report.brackets_discarded;
      return false;
    }
    const std::size_t idx = report.words.size();
    if (!span.insert(coordinates(field), {{idx, Coeff(1)}})) return false;
    report.words.push_back(std::move(word));
    word_fields.push_back(field);
    return true;
  };

  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (offer(LieWord{{k}}, gen_fields[k])) frontier.push_back(report.words.size() - 1);
  }

  for (int len = 2; len <= max_len && !frontier.empty(); ++len) {
    struct Task {
      std::size_t gen;
      std::size_t word;
    };
    std::vector<Task> tasks;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      for (std::size_t w : frontier) tasks.push_back({g, w});
    }
    std::vector<std::optional<Derivation>> results(tasks.size());
    util::parallel_for(tasks.size(), [&](std::size_t i) {
      results[i] = fields::lie_bracket(gen_fields[tasks[i].gen], word_fields[tasks[i].word]);
    });
    std::vector<std::size_t> next;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      LieWord word;
      word.letters.push_back(tasks[i].gen);
      const auto& inner = report.words[tasks[i].word].letters;
      word.letters.insert(word.letters.end(), inner.begin(), inner.end());
      if (offer(std::move(word), *results[i])) next.push_back(report.words.size() - 1);
    }
    frontier = std::move(next);
  }

  for (const auto& row : span.rows()) {
    if (row.vec.begin()->first.degree > target_deg) continue;
    SaturationWitness w{from_coordinates(row.vec, variety), {}};
    for (const auto& [idx, c] : row.combo) w.combination.emplace_back(idx, c);
    report.witnesses.push_back(std::move(w));
  }
  report.span_dim = report.witnesses.size();
  if (report.span_dim > report.target_dim) {
    throw InvariantFailure("saturation span exceeds the tangent-field dimension");
  }
  report.certified = report.span_dim == report.target_dim;
  return report;
}

bool replay_witnesses(const SaturationReport& report, std::span<const OvershearField> gens) {
  for (const auto& w : report.witnesses) {
    if (w.combination.empty()) return false;
    std::optional<Derivation> acc;
    for (const auto& [idx, c] : w.combination) {
      Derivation term = evaluate_word(report.words.at(idx), gens) * c;
      acc = acc ? *acc + term : term;
    }
    if (!(*acc == w.field)) return false;
    if (w.field.degree() > report.target_deg) return false;
  }
  return true;
}

}  // namespace lnd::denslab
