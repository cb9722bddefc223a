#include "lndlab/cli/report.hpp"

#include <cstdio>
#include <stdexcept>

#include "lndlab/polyalg/parser.hpp"

namespace lnd::cli {

using polyalg::Coeff;

json coeff_json(const Coeff& c) { return c.to_string(); }

json complex_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

json point_json(std::span<const Coeff> p) {
  json out = json::array();
  for (const auto& c : p) out.push_back(coeff_json(c));
  return out;
}

json complex_vector_json(std::span<const std::complex<double>> v) {
  json out = json::array();
  for (auto z : v) out.push_back(complex_json(z));
  return out;
}

json derivation_json(const fields::Derivation& d) {
  json images = json::object();
  const auto& ring = d.variety()->ring();
  for (std::size_t i = 0; i < ring.arity(); ++i) images[ring.var(i)] = d.image(i).to_string();
  return {{"variety", d.variety()->name()}, {"images", images}};
}

json certificate_json(const fields::Lnd& l) {
  json out = json::object();
  const auto& ring = l.variety()->ring();
  for (std::size_t i = 0; i < ring.arity(); ++i) out[ring.var(i)] = l.certificate().indices[i];
  return out;
}

std::string certificate_text(const fields::Lnd& l) {
  std::string out;
  const auto& ring = l.variety()->ring();
  for (std::size_t i = 0; i < ring.arity(); ++i) {
    if (i) out += ", ";
    out += ring.var(i) + ": " + std::to_string(l.certificate().indices[i]);
  }
  return out;
}

std::string point_text(std::span<const Coeff> p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ", ";
    out += p[i].to_string();
  }
  return out + ")";
}

std::string complex_text(std::complex<double> z) {
  char buf[64];
  if (z.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.17g", z.real());
  } else {
    std::snprintf(buf, sizeof buf, "(%.17g%+.17g*I)", z.real(), z.imag());
  }
  return buf;
}

json factor_list_json(const tame::FactorList& list) {
  json out = json::array();
  for (const auto& f : list.factors) {
    if (const auto* a = std::get_if<tame::AffineFactor>(&f)) {
      out.push_back({{"kind", "affine"},
                     {"matrix", json::array({json::array({coeff_json(a->matrix[0][0]), coeff_json(a->matrix[0][1])}),
                                             json::array({coeff_json(a->matrix[1][0]), coeff_json(a->matrix[1][1])})})},
                     {"translation", json::array({coeff_json(a->translation[0]), coeff_json(a->translation[1])})}});
    } else {
      const auto& e = std::get<tame::ElementaryFactor>(f);
      out.push_back({{"kind", "elementary"}, {"axis", e.axis}, {"added", e.added.to_string()}});
    }
  }
  return out;
}

tame::FactorList factor_list_from_json(const json& j, const polyalg::Ring& ring) {
  tame::FactorList list{ring, {}};
  for (const auto& f : j) {
    const std::string kind = f.at("kind").get<std::string>();
    if (kind == "affine") {
      tame::AffineFactor a;
      for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) a.matrix[r][c] = polyalg::parse_coeff(f.at("matrix").at(r).at(c).get<std::string>());
        a.translation[r] = polyalg::parse_coeff(f.at("translation").at(r).get<std::string>());
      }
      if (a.determinant().is_zero()) throw std::invalid_argument("affine factor is singular");
      list.factors.emplace_back(a);
    } else if (kind == "elementary") {
      const int axis = f.at("axis").get<int>();
      if (axis != 1 && axis != 2) throw std::invalid_argument("elementary axis must be 1 or 2");
      list.factors.emplace_back(tame::ElementaryFactor{axis, polyalg::parse_poly(f.at("added").get<std::string>(), ring)});
    } else {
      throw std::invalid_argument("unknown factor kind '" + kind + "'");
    }
  }
  return list;
}

json saturation_json(const denslab::SaturationReport& r) {
  json words = json::array();
  for (const auto& w : r.words) words.push_back(w.render());
  json witnesses = json::array();
  for (const auto& w : r.witnesses) {
    json combo = json::array();
    for (const auto& [idx, c] : w.combination) combo.push_back({{"word", r.words.at(idx).render()}, {"coeff", coeff_json(c)}});
    witnesses.push_back({{"field", derivation_json(w.field)["images"]}, {"combination", combo}});
  }
  return {{"generators", r.generators},
          {"target_deg", r.target_deg},
          {"work_deg", r.work_deg},
          {"max_len", r.max_len},
          {"span_dim", r.span_dim},
          {"target_dim", r.target_dim},
          {"certified", r.certified},
          {"words", words},
          {"witnesses", witnesses},
          {"brackets_computed", r.brackets_computed},
          {"brackets_discarded", r.brackets_discarded}};
}

json pair_json(const denslab::PairReport& r) {
  json ideal = json::array();
  for (const auto& g : r.ideal_gens) ideal.push_back(g.to_string());
  return {{"h", r.h ? json(r.h->to_string()) : json(nullptr)},
          {"h_nondegenerate", r.h_nondegenerate},
          {"ideal_gens", ideal},
          {"containment_verified_to", r.containment_verified_to},
          {"containment_holds", r.containment_holds},
          {"first_missing", r.first_missing ? json(r.first_missing->to_string()) : json(nullptr)},
          {"kernel_dim_theta", r.kernel_dim_theta},
          {"kernel_dim_xi", r.kernel_dim_xi},
          {"product_span_dim", r.product_span_dim},
          {"is_compatible_at_bound", r.is_compatible_at_bound}};
}

json flex_json(const denslab::FlexReport& r) {
  json values = json::array();
  for (const auto& v : r.lnd_values) values.push_back(point_json(v));
  return {{"point", point_json(r.point)},
          {"lnd_values", values},
          {"tangent_dim", r.tangent_dim},
          {"rank", r.rank},
          {"spans", r.spans}};
}

}  // namespace lnd::cli
