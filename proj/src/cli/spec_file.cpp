#include "lndlab/cli/spec_file.hpp"

#include <fstream>
#include <stdexcept>

#include "lndlab/errors.hpp"
#include "lndlab/polyalg/parser.hpp"

namespace lnd::cli {

using fields::AffineVariety;
using fields::RingElement;
using polyalg::Polynomial;
using polyalg::Ring;

const fields::Derivation& Workspace::derivation(const std::string& name) const {
  for (const auto& d : derivations) {
    if (d.name == name) return d.value;
  }
  throw std::invalid_argument("no derivation named '" + name + "' in " + source);
}

Workspace load_bundle(const std::string& name) {
  Workspace ws{catalog::bundle_by_name(name), {}, "bundle " + name};
  for (const auto& l : ws.bundle.lnds) ws.derivations.push_back({l.name, l.value.derivation()});
  return ws;
}

Workspace parse_spec(const nlohmann::json& doc, const std::string& label) {
  const auto& var = doc.at("variety");
  const Ring ring(var.at("vars").get<std::vector<std::string>>());
  std::vector<Polynomial> defining;
  for (const auto& q : var.value("defining", std::vector<std::string>{})) defining.push_back(polyalg::parse_poly(q, ring));
  std::optional<idealquot::MonomialOrder> order;
  if (var.contains("order")) {
    const auto& o = var.at("order");
    const std::string kind = o.value("kind", "grevlex");
    if (kind != "grevlex" && kind != "lex") throw std::invalid_argument("unknown monomial order '" + kind + "'");
    order = idealquot::MonomialOrder::make(kind == "lex" ? idealquot::OrderKind::lex : idealquot::OrderKind::grevlex,
                                           ring, o.value("precedence", ring.vars()));
  }
  auto v = AffineVariety::create(doc.value("name", label), ring, defining, order);

  Workspace ws{catalog::VarietyBundle{v->name(), v, {}, {}, {}, {}, {}, {}, doc.value("notes", "")}, {}, "spec " + label};
  auto& b = ws.bundle;
  if (doc.contains("derivations")) {
    for (const auto& [name, body] : doc.at("derivations").items()) {
      std::vector<std::pair<std::string, std::string>> images;
      for (const auto& [x, img] : body.at("images").items()) images.emplace_back(x, img.get<std::string>());
      auto d = fields::make_derivation(v, images);
      auto verdict = fields::check_lnd(d);
      if (verdict.nilpotent()) b.lnds.push_back({name, verdict.lnd()});
      ws.derivations.push_back({name, std::move(d)});
    }
  }
  if (doc.contains("overshears")) {
    for (const auto& [name, body] : doc.at("overshears").items()) {
      const std::string base = body.at("base").get<std::string>();
      const auto* lnd = [&]() -> const fields::Lnd* {
        for (const auto& l : b.lnds) {
          if (l.name == base) return &l.value;
        }
        return nullptr;
      }();
      if (!lnd) throw std::invalid_argument("overshear '" + name + "': base '" + base + "' is not a certified LND");
      const RingElement f(v, v->parse(body.at("f").get<std::string>()));
      b.overshear_samples.push_back({name, fields::make_overshear(*lnd, f).with_label(name)});
    }
  }
  for (const auto& u : doc.value("units", nlohmann::json::array())) {
    b.units.push_back({RingElement(v, v->parse(u.at(0).get<std::string>())),
                       RingElement(v, v->parse(u.at(1).get<std::string>()))});
  }
  for (const auto& g : doc.value("ideal_candidates", nlohmann::json::array())) {
    b.ideal_candidates.emplace_back(v, v->parse(g.get<std::string>()));
  }
  for (const auto& p : doc.value("pairs", nlohmann::json::array())) {
    b.pair_candidates.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
  }
  for (const auto& p : doc.value("points", nlohmann::json::array())) {
    std::vector<polyalg::Coeff> pt;
    for (const auto& c : p) pt.push_back(c.is_string() ? polyalg::parse_coeff(c.get<std::string>()) : polyalg::Coeff(c.get<long>()));
    if (pt.size() != ring.arity()) throw ArityMismatch("spec point has the wrong number of coordinates");
    if (!v->contains_point(pt)) throw PointNotOnVariety("spec point is not on the variety");
    b.points.push_back(std::move(pt));
  }
  return ws;
}

Workspace load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open spec file '" + path + "'");
  return parse_spec(nlohmann::json::parse(in), path);
}

}  // namespace lnd::cli
