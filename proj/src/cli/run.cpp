#include "lndlab/cli/run.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "lndlab/catalog/catalog.hpp"
#include "lndlab/cli/report.hpp"
#include "lndlab/cli/spec_file.hpp"
#include "lndlab/denslab/compat.hpp"
#include "lndlab/denslab/saturate.hpp"
#include "lndlab/denslab/tangent.hpp"
#include "lndlab/denslab/units.hpp"
#include "lndlab/errors.hpp"
#include "lndlab/fields/flow.hpp"
#include "lndlab/idealquot/groebner.hpp"
#include "lndlab/polyalg/parser.hpp"
#include "lndlab/tame/bracket_fd.hpp"
#include "lndlab/tame/grid.hpp"
#include "lndlab/tame/jvdk.hpp"

namespace lnd::cli {

namespace {

using fields::Derivation;
using fields::FlowMap;
using fields::Lnd;
using fields::OvershearField;
using fields::RingElement;
using polyalg::Coeff;
using polyalg::Polynomial;
using polyalg::Ring;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Every option of every subcommand; each subcommand binds the fields it uses.
struct Opts {
  std::string bundle;
  std::string spec;
  bool json = false;
  std::uint64_t seed = 1;

  std::string poly;
  std::vector<std::string> polys;
  std::string vars;
  std::string order = "grevlex";
  std::string precedence;
  std::string derivation;
  std::string overshear;
  std::string left;
  std::string right;
  std::string f;
  std::string g;
  std::string time;
  std::string at;
  std::string lnds;
  std::string theta;
  std::string xi;
  std::vector<std::string> ideal;
  std::string map;
  std::string ts = "1e-3,1e-4,1e-5";
  std::string name;
  int max_iter = fields::kDefaultMaxIter;
  int random = 0;
  long gen_deg = 2;
  long target_deg = 1;
  long work_deg = -1;
  int max_len = 3;
  long bound = 3;
  int max_steps = 64;
  double center = 0.0;
  double radius = 1.0;
  int samples = 5;
  double tol = 1e-9;
  double ratio = 1.6;
};

class Session {
 public:
  explicit Session(const Opts& o) : o_(o) {}

  bool has_workspace() const { return !o_.spec.empty() || !o_.bundle.empty(); }

  const Workspace& ws() {
    if (!ws_) {
      if (!o_.spec.empty() && !o_.bundle.empty()) throw UsageError("--bundle and --spec are exclusive");
      if (!o_.spec.empty()) {
        ws_ = load_spec_file(o_.spec);
      } else if (!o_.bundle.empty()) {
        ws_ = load_bundle(o_.bundle);
      } else {
        throw UsageError("this command needs --bundle <name> or --spec <file>");
      }
    }
    return *ws_;
  }
  const fields::VarietyPtr& variety() { return ws().bundle.variety; }

  json rep = json::object();
  std::ostringstream text;

 private:
  const Opts& o_;
  std::optional<Workspace> ws_;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// Identifiers in order of first appearance, skipping the imaginary unit.
std::vector<std::string> identifiers_in(const std::string& text) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < text.size();) {
    if (std::isalpha(static_cast<unsigned char>(text[i]))) {
      std::size_t j = i + 1;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      const std::string id = text.substr(i, j - i);
      if (id != "I" && std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
    } else {
      ++i;
    }
  }
  return out;
}

Ring standalone_ring(const Opts& o, const std::string& text, std::vector<std::string> fallback = {}) {
  if (!o.vars.empty()) return Ring(split(o.vars, ','));
  auto ids = identifiers_in(text);
  if (!fallback.empty()) {
    for (const auto& id : ids) {
      if (std::find(fallback.begin(), fallback.end(), id) == fallback.end()) fallback.push_back(id);
    }
    return Ring(fallback);
  }
  return Ring(ids);
}

std::vector<Coeff> parse_point(const std::string& text, std::size_t arity) {
  std::vector<Coeff> p;
  for (const auto& c : split(text, ',')) p.push_back(polyalg::parse_coeff(c));
  if (p.size() != arity) {
    throw ArityMismatch("point has " + std::to_string(p.size()) + " coordinates, expected " + std::to_string(arity));
  }
  return p;
}

std::vector<std::complex<double>> to_complex(std::span<const Coeff> p) {
  std::vector<std::complex<double>> out;
  for (const auto& c : p) out.push_back(c.to_complex());
  return out;
}

// Exact when the text is in the coefficient grammar, otherwise a float.
std::pair<std::optional<Coeff>, std::complex<double>> parse_time(const std::string& text) {
  try {
    Coeff c = polyalg::parse_coeff(text);
    return {c, c.to_complex()};
  } catch (const ParseError&) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != text.size() || text.empty()) throw UsageError("cannot read time '" + text + "'");
    return {std::nullopt, v};
  }
}

// A name from the workspace, or inline images "x=poly; y=poly".
Derivation resolve_derivation(Session& s, const std::string& ref) {
  if (ref.find('=') == std::string::npos) return s.ws().derivation(ref);
  std::vector<std::pair<std::string, std::string>> images;
  for (const auto& item : split(ref, ';')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("inline image '" + item + "' lacks '='");
    images.emplace_back(trim(item.substr(0, eq)), trim(item.substr(eq + 1)));
  }
  return fields::make_derivation(s.variety(), images);
}

Lnd resolve_lnd(Session& s, const std::string& ref) {
  if (ref.find('=') == std::string::npos) {
    for (const auto& l : s.ws().bundle.lnds) {
      if (l.name == ref) return l.value;
    }
  }
  return fields::certify(resolve_derivation(s, ref));
}

std::vector<catalog::Named<Lnd>> selected_lnds(Session& s, const std::string& names) {
  if (names.empty()) return s.ws().bundle.lnds;
  std::vector<catalog::Named<Lnd>> out;
  for (const auto& n : split(names, ',')) out.push_back({n, resolve_lnd(s, n)});
  return out;
}

RingElement element(Session& s, const std::string& text) { return RingElement(s.variety(), s.variety()->parse(text)); }

// ---------------------------------------------------------------- commands

int cmd_parse(Session& s, const Opts& o) {
  const Ring ring = s.has_workspace() ? s.variety()->ring() : standalone_ring(o, o.poly);
  const Polynomial p = polyalg::parse_poly(o.poly, ring);
  s.rep["canonical"] = p.to_string();
  s.rep["degree"] = p.degree();
  s.rep["vars"] = ring.vars();
  s.text << p.to_string() << "\n";
  if (s.has_workspace()) {
    const auto nf = s.variety()->reduce(p);
    s.rep["normal_form"] = nf.to_string();
    s.text << "normal form: " << nf.to_string() << "\n";
  }
  return kVerified;
}

int cmd_gb(Session& s, const Opts& o) {
  if (o.polys.empty()) {
    const auto& gb = s.variety()->gb();
    json basis = json::array();
    for (const auto& g : gb.gens()) basis.push_back(g.to_string());
    s.rep["order"] = gb.order().describe(gb.ring());
    s.rep["basis"] = basis;
    s.rep["unit_ideal"] = gb.is_unit_ideal();
  } else {
    std::string joined;
    for (const auto& p : o.polys) joined += p + " ";
    const Ring ring = s.has_workspace() ? s.variety()->ring() : standalone_ring(o, joined);
    std::vector<Polynomial> gens;
    for (const auto& p : o.polys) gens.push_back(polyalg::parse_poly(p, ring));
    if (o.order != "grevlex" && o.order != "lex") throw UsageError("--order must be grevlex or lex");
    const auto kind = o.order == "lex" ? idealquot::OrderKind::lex : idealquot::OrderKind::grevlex;
    const auto order = idealquot::MonomialOrder::make(kind, ring, o.precedence.empty() ? ring.vars() : split(o.precedence, ','));
    const auto gb = idealquot::groebner(gens, order);
    json basis = json::array();
    for (const auto& g : gb.gens()) basis.push_back(g.to_string());
    s.rep["order"] = order.describe(ring);
    s.rep["basis"] = basis;
    s.rep["unit_ideal"] = gb.is_unit_ideal();
  }
  s.text << "order: " << s.rep["order"].get<std::string>() << "\n";
  for (const auto& g : s.rep["basis"]) s.text << "  " << g.get<std::string>() << "\n";
  return kVerified;
}

int cmd_check_lnd(Session& s, const Opts& o) {
  const Derivation d = resolve_derivation(s, o.derivation);
  const auto verdict = fields::check_lnd(d, o.max_iter);
  s.rep["derivation"] = derivation_json(d);
  s.rep["bound"] = o.max_iter;
  s.rep["verdict"] = verdict.nilpotent() ? "Nilpotent" : "Inconclusive";
  s.text << "derivation: " << d.to_string() << "\n";
  if (verdict.nilpotent()) {
    s.rep["certificate"] = certificate_json(verdict.lnd());
    s.text << "verdict: Nilpotent\ncertificate: " << certificate_text(verdict.lnd()) << "\n";
    return kVerified;
  }
  s.rep["certificate"] = nullptr;
  s.text << "verdict: Inconclusive at bound " << o.max_iter << "\n";
  return kNotVerified;
}

int cmd_bracket(Session& s, const Opts& o) {
  const Derivation a = resolve_derivation(s, o.left);
  const Derivation b = resolve_derivation(s, o.right);
  const Derivation c = fields::lie_bracket(a, b);
  s.rep["left"] = derivation_json(a);
  s.rep["right"] = derivation_json(b);
  s.rep["bracket"] = derivation_json(c);
  s.rep["is_zero"] = c.is_zero();
  s.text << "[" << o.left << ", " << o.right << "] = " << c.to_string() << "\n";
  return kVerified;
}

int cmd_shear(Session& s, const Opts& o) {
  const Lnd base = resolve_lnd(s, o.derivation);
  const RingElement f = element(s, o.f);
  s.rep["base"] = derivation_json(base.derivation());
  s.rep["f"] = f.to_string();
  try {
    const Lnd sh = fields::make_shear(base, f);
    s.rep["verdict"] = "shear";
    s.rep["field"] = derivation_json(sh.derivation());
    s.rep["certificate"] = certificate_json(sh);
    s.text << "shear: " << sh.derivation().to_string() << "\ncertificate: " << certificate_text(sh) << "\n";
    return kVerified;
  } catch (const ShearConditionViolated& e) {
    s.rep["verdict"] = "violated";
    s.rep["residue"] = e.residue();
    s.text << "not a shear: D(f) = " << e.residue() << "\n";
    return kNotVerified;
  }
}

int cmd_overshear(Session& s, const Opts& o) {
  const Lnd base = resolve_lnd(s, o.derivation);
  const RingElement f = element(s, o.f);
  s.rep["base"] = derivation_json(base.derivation());
  s.rep["f"] = f.to_string();
  try {
    const OvershearField os = fields::make_overshear(base, f);
    s.rep["verdict"] = "overshear";
    s.rep["a"] = os.a().to_string();
    s.rep["is_shear"] = os.is_shear();
    s.rep["field"] = derivation_json(os.field());
    s.text << "overshear: " << os.field().to_string() << "\nD(f) = " << os.a().to_string()
           << (os.is_shear() ? " (a shear)" : "") << "\n";
    return kVerified;
  } catch (const OvershearConditionViolated& e) {
    s.rep["verdict"] = "violated";
    s.rep["residue"] = e.residue();
    s.text << "not an overshear: D^2(f) = " << e.residue() << "\n";
    return kNotVerified;
  }
}

FlowMap flow_of_name(Session& s, const std::string& name) {
  for (const auto& o : s.ws().bundle.overshear_samples) {
    if (o.name == name) return fields::flow_overshear(o.value);
  }
  return fields::flow_lnd(resolve_lnd(s, name));
}

int cmd_flow(Session& s, const Opts& o) {
  std::optional<FlowMap> flow;
  if (!o.overshear.empty()) {
    flow = fields::flow_overshear(s.ws().bundle.overshear(o.overshear));
  } else if (o.derivation.empty()) {
    throw UsageError("flow needs --derivation or --overshear");
  } else if (!o.f.empty()) {
    try {
      flow = fields::flow_overshear(fields::make_overshear(resolve_lnd(s, o.derivation), element(s, o.f)));
    } catch (const OvershearConditionViolated& e) {
      s.rep["verdict"] = "violated";
      s.rep["residue"] = e.residue();
      s.text << "not an overshear: D^2(f) = " << e.residue() << "\n";
      return kNotVerified;
    }
  } else {
    flow = fields::flow_lnd(resolve_lnd(s, o.derivation));
  }
  const auto* poly = std::get_if<fields::PolynomialFlow>(&*flow);
  const bool ideal_ok =
      poly ? poly->preserves_ideal() : std::get<fields::HybridFlow>(*flow).poly_flow_in_s.preserves_ideal();
  s.rep["kind"] = poly ? "polynomial" : "hybrid";
  s.rep["flow"] = fields::describe(*flow);
  s.rep["ideal_preserved"] = ideal_ok;
  s.text << fields::describe(*flow) << "\nideal preserved: " << (ideal_ok ? "yes" : "no") << "\n";
  bool ok = ideal_ok;

  std::optional<Coeff> exact_time;
  std::complex<double> t = 1.0;
  if (!o.time.empty()) {
    std::tie(exact_time, t) = parse_time(o.time);
    s.rep["time"] = o.time;
    if (poly && exact_time) {
      json imgs = json::array();
      s.text << "at time " << exact_time->to_string() << ":";
      for (const auto& p : poly->at(*exact_time)) {
        imgs.push_back(p.to_string());
        s.text << " " << p.to_string() << ";";
      }
      s.text << "\n";
      s.rep["images_at_time"] = imgs;
    }
  }
  if (!o.at.empty()) {
    const auto& x = *s.variety();
    const auto point = parse_point(o.at, x.arity());
    if (!x.contains_point(point)) throw PointNotOnVariety("point " + point_text(point) + " is not on " + x.name());
    const auto zp = to_complex(point);
    const auto image = fields::eval_flow(*flow, t, zp);
    double residual = 0.0;
    for (const auto& q : x.defining()) residual = std::max(residual, std::abs(polyalg::evaluate(q, image)));
    s.rep["point"] = point_json(point);
    s.rep["image"] = complex_vector_json(image);
    s.rep["defining_residual"] = residual;
    s.text << "image of " << point_text(point) << ":";
    for (auto z : image) s.text << " " << complex_text(z);
    s.text << "\n";
    if (poly && exact_time) {
      std::vector<Coeff> exact;
      for (const auto& p : poly->at(*exact_time)) exact.push_back(polyalg::evaluate_exact(p, point));
      s.rep["image_exact"] = point_json(exact);
      ok = ok && x.contains_point(exact);
    } else {
      ok = ok && residual <= 1e-9;
    }
  }
  s.rep["verdict"] = ok;
  return ok ? kVerified : kNotVerified;
}

int cmd_flex(Session& s, const Opts& o) {
  const auto& x = *s.variety();
  std::vector<std::vector<Coeff>> points;
  if (!o.at.empty()) {
    points.push_back(parse_point(o.at, x.arity()));
  } else if (o.random > 0) {
    std::mt19937_64 rng(o.seed);
    for (int i = 0; i < o.random; ++i) points.push_back(denslab::random_point(x, rng));
  } else {
    points = s.ws().bundle.points;
  }
  if (points.empty()) throw UsageError("flex needs --at, --random or fixture points");
  const auto named = selected_lnds(s, o.lnds);
  std::vector<Lnd> lnds;
  json names = json::array();
  for (const auto& l : named) {
    lnds.push_back(l.value);
    names.push_back(l.name);
  }
  json reports = json::array();
  bool all = true;
  for (const auto& p : points) {
    const auto r = denslab::flexible_at(x, lnds, p);
    reports.push_back(flex_json(r));
    all = all && r.spans;
    s.text << point_text(p) << ": rank " << r.rank << " of " << r.tangent_dim << (r.spans ? " (spans)" : "") << "\n";
  }
  s.rep["lnds"] = names;
  s.rep["points"] = reports;
  s.rep["spans"] = all;
  return all ? kVerified : kNotVerified;
}

int cmd_saturate(Session& s, const Opts& o) {
  const auto named = selected_lnds(s, o.lnds);
  std::vector<Lnd> lnds;
  std::vector<std::string> names;
  for (const auto& l : named) {
    lnds.push_back(l.value);
    names.push_back(l.name);
  }
  const long work = o.work_deg >= 0 ? o.work_deg : o.target_deg + o.gen_deg;
  const auto gens = denslab::overshear_generators(lnds, names, o.gen_deg);
  const auto r = denslab::lie_saturate(gens, o.target_deg, work, o.max_len);
  if (!denslab::replay_witnesses(r, gens)) throw InvariantFailure("saturation witnesses do not replay");
  s.rep["saturation"] = saturation_json(r);
  s.rep["gen_deg"] = o.gen_deg;
  s.rep["certified"] = r.certified;
  s.text << "generators: " << gens.size() << " overshears, multiplier degree <= " << o.gen_deg << "\n"
         << "span " << r.span_dim << " of " << r.target_dim << " (target degree " << r.target_deg << ", work degree "
         << r.work_deg << ", max length " << r.max_len << ")\n"
         << (r.certified ? "certified" : "not certified at these bounds") << "\n";
  return r.certified ? kVerified : kNotVerified;
}

int cmd_compat(Session& s, const Opts& o) {
  const auto& b = s.ws().bundle;
  std::string theta = o.theta;
  std::string xi = o.xi;
  if (theta.empty() != xi.empty()) throw UsageError("give both --theta and --xi, or neither");
  if (theta.empty()) {
    if (b.pair_candidates.empty()) throw UsageError("no --theta/--xi given and the workspace has no pair candidates");
    std::tie(theta, xi) = b.pair_candidates.front();
  }
  std::vector<RingElement> ideal;
  for (const auto& g : o.ideal) ideal.push_back(element(s, g));
  if (ideal.empty()) ideal = b.ideal_candidates;
  if (ideal.empty()) throw UsageError("no --ideal given and the workspace has no ideal candidates");
  const auto r = denslab::check_compatible_pair(resolve_lnd(s, theta), resolve_lnd(s, xi), ideal, o.bound);
  s.rep["theta"] = theta;
  s.rep["xi"] = xi;
  s.rep["bound"] = o.bound;
  s.rep["pair"] = pair_json(r);
  s.rep["is_compatible_at_bound"] = r.is_compatible_at_bound;
  s.text << "pair (" << theta << ", " << xi << ") at bound " << o.bound << "\n"
         << "h: " << (r.h ? r.h->to_string() : std::string("none")) << "\n"
         << "ideal containment: " << (r.containment_holds ? "holds" : "not verified");
  if (r.first_missing) s.text << " (missing " << r.first_missing->to_string() << ")";
  s.text << "\ncompatible at bound: " << (r.is_compatible_at_bound ? "yes" : "no") << "\n";
  return r.is_compatible_at_bound ? kVerified : kNotVerified;
}

int cmd_unit(Session& s, const Opts& o) {
  const auto& b = s.ws().bundle;
  const auto& x = *s.variety();
  std::vector<catalog::UnitPair> units;
  if (!o.f.empty() || !o.g.empty()) {
    if (o.f.empty() || o.g.empty()) throw UsageError("give both --f and --g");
    units.push_back({element(s, o.f), element(s, o.g)});
  } else {
    units = b.units;
  }
  json witnesses = json::array();
  bool obstruction = false;
  for (const auto& u : units) {
    const bool verified = denslab::verify_unit_witness(x, u.f, u.g);
    const bool inverse = (u.f * u.g).rep() == Polynomial::constant(x.ring(), 1);
    json killed = json::object();
    bool all = true;
    for (const auto& l : b.lnds) {
      const bool k = inverse && denslab::lnd_annihilates_units(l.value, u.f, u.g);
      killed[l.name] = k;
      all = all && k;
    }
    witnesses.push_back({{"f", u.f.to_string()}, {"g", u.g.to_string()}, {"verified", verified}, {"annihilated_by", killed}});
    s.text << "unit " << u.f.to_string() << " with inverse " << u.g.to_string() << ": "
           << (verified ? "nonconstant unit" : "not a nonconstant unit");
    if (verified) s.text << (all ? ", killed by every LND" : ", moved by some LND");
    s.text << "\n";
    obstruction = obstruction || (verified && all);
  }
  if (units.empty()) s.text << "no unit witnesses\n";
  s.text << "obstruction: " << (obstruction ? "yes" : "no") << "\n";
  s.rep["witnesses"] = witnesses;
  s.rep["obstruction"] = obstruction;
  return obstruction ? kVerified : kNotVerified;
}

int cmd_decompose(Session& s, const Opts& o) {
  const Ring ring = standalone_ring(o, "", {"x", "y"});
  const auto map = tame::PolyMap::parse(ring, o.map);
  const auto r = tame::jvdk_decompose(map, o.max_steps);
  s.rep["map"] = map.to_string();
  s.rep["steps"] = r.steps;
  const bool exact = r.factors && tame::recompose(*r.factors) == map;
  s.rep["recomposition_exact"] = exact;
  s.text << "map: " << map.to_string() << "\n";
  if (r.factors) {
    s.rep["factors"] = factor_list_json(*r.factors);
    s.rep["reason"] = nullptr;
    for (const auto& f : r.factors->factors) s.text << "  " << tame::factor_map(ring, f).to_string() << "\n";
    s.text << "recomposition " << (exact ? "exact" : "MISMATCH") << "\n";
  } else {
    s.rep["factors"] = nullptr;
    s.rep["reason"] = r.reason;
    s.text << "inconclusive after " << r.steps << " steps: " << r.reason << "\n";
  }
  return exact ? kVerified : kNotVerified;
}

tame::MapSource map_source(Session& s, const Opts& o, const std::string& ref) {
  if (ref.rfind("flow:", 0) == 0) {
    const auto at = ref.find('@');
    const std::string name = ref.substr(5, at == std::string::npos ? std::string::npos : at - 5);
    const auto t = at == std::string::npos ? std::complex<double>(1.0) : parse_time(ref.substr(at + 1)).second;
    return tame::TimedFlow{flow_of_name(s, name), t};
  }
  const Ring ring = s.has_workspace() ? s.variety()->ring() : standalone_ring(o, o.left + " " + o.right);
  return tame::PolyMap::parse(ring, ref);
}

int cmd_compare(Session& s, const Opts& o) {
  const tame::Grid grid{o.center, o.radius, o.samples};
  const double dev = tame::compare_on_grid(map_source(s, o, o.left), map_source(s, o, o.right), grid);
  const bool agree = dev <= o.tol;
  s.rep["left"] = o.left;
  s.rep["right"] = o.right;
  s.rep["grid"] = {{"center", grid.center}, {"radius", grid.radius}, {"samples", grid.samples}};
  s.rep["max_deviation"] = dev;
  s.rep["tol"] = o.tol;
  s.rep["agree"] = agree;
  s.text << "max deviation " << dev << " (tolerance " << o.tol << "): " << (agree ? "agree" : "differ") << "\n";
  return agree ? kVerified : kNotVerified;
}

int cmd_bracket_fd(Session& s, const Opts& o) {
  const Lnd theta = resolve_lnd(s, o.theta);
  const Derivation other = resolve_derivation(s, o.xi);
  const auto& x = *s.variety();
  std::vector<Coeff> point;
  if (!o.at.empty()) {
    point = parse_point(o.at, x.arity());
  } else if (!s.ws().bundle.points.empty()) {
    point = s.ws().bundle.points.back();
  } else {
    throw UsageError("bracket-fd needs --at");
  }
  std::vector<double> ts;
  for (const auto& t : split(o.ts, ',')) ts.push_back(std::stod(t));
  json rows = json::array();
  std::vector<double> errors;
  for (double t : ts) {
    const auto r = tame::bracket_flow_check(theta, other, point, t);
    errors.push_back(r.abs_error);
    rows.push_back({{"t", t},
                    {"abs_error", r.abs_error},
                    {"fd", complex_vector_json(r.fd_vector)},
                    {"exact", complex_vector_json(r.exact_vector)}});
    s.text << "t = " << t << ": error " << r.abs_error << "\n";
  }
  // Each step must shrink the error by `ratio`, unless both errors are at round-off level.
  bool ok = errors.size() >= 2;
  for (std::size_t i = 1; i < errors.size(); ++i) {
    const bool negligible = errors[i - 1] <= 1e-9 && errors[i] <= 1e-9;
    ok = ok && (negligible || errors[i] * o.ratio <= errors[i - 1]);
  }
  s.rep["point"] = point_json(point);
  s.rep["samples"] = rows;
  s.rep["ratio"] = o.ratio;
  s.rep["converges"] = ok;
  s.text << "converges: " << (ok ? "yes" : "no") << "\n";
  return ok ? kVerified : kNotVerified;
}

int cmd_bundle_list(Session& s, const Opts&) {
  s.rep["bundles"] = catalog::bundle_names();
  for (const auto& n : catalog::bundle_names()) s.text << n << "\n";
  return kVerified;
}

int cmd_bundle_show(Session& s, const Opts&) {
  const auto& ws = s.ws();
  const auto& b = ws.bundle;
  json lnds = json::object();
  json oversh = json::object();
  json units = json::array();
  json ideal = json::array();
  json pairs = json::array();
  json points = json::array();
  json defining = json::array();
  json basis = json::array();
  for (const auto& q : b.variety->defining()) defining.push_back(q.to_string());
  for (const auto& g : b.variety->gb().gens()) basis.push_back(g.to_string());
  s.text << b.name << "\nvariables:";
  for (const auto& v : b.variety->ring().vars()) s.text << " " << v;
  s.text << "\ndefining:";
  for (const auto& q : defining) s.text << " " << q.get<std::string>();
  s.text << "\nLNDs:\n";
  for (const auto& l : b.lnds) {
    lnds[l.name] = {{"images", derivation_json(l.value.derivation())["images"]}, {"certificate", certificate_json(l.value)}};
    s.text << "  " << l.name << " " << l.value.derivation().to_string() << "  [" << certificate_text(l.value) << "]\n";
  }
  s.text << "overshears:\n";
  for (const auto& os : b.overshear_samples) {
    oversh[os.name] = {{"base_images", derivation_json(os.value.base().derivation())["images"]},
                       {"f", os.value.f().to_string()},
                       {"a", os.value.a().to_string()}};
    s.text << "  " << os.name << " f = " << os.value.f().to_string() << ", D(f) = " << os.value.a().to_string() << "\n";
  }
  for (const auto& u : b.units) units.push_back(json::array({u.f.to_string(), u.g.to_string()}));
  for (const auto& g : b.ideal_candidates) ideal.push_back(g.to_string());
  for (const auto& [t, x] : b.pair_candidates) pairs.push_back(json::array({t, x}));
  for (const auto& p : b.points) points.push_back(point_json(p));
  if (!b.notes.empty()) s.text << "notes: " << b.notes << "\n";
  s.rep["bundle"] = {{"name", b.name},
                     {"vars", b.variety->ring().vars()},
                     {"defining", defining},
                     {"groebner_basis", basis},
                     {"lnds", lnds},
                     {"overshears", oversh},
                     {"units", units},
                     {"ideal_candidates", ideal},
                     {"pair_candidates", pairs},
                     {"points", points},
                     {"notes", b.notes}};
  return kVerified;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Opts o;
  CLI::App app{"Exact computations with locally nilpotent derivations, overshears and their flows.", "lnd-lab"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--bundle", o.bundle, "catalog bundle (see `bundle list`)");
  app.add_option("--spec", o.spec, "JSON spec file describing a variety and its fields");
  app.add_flag("--json", o.json, "machine-readable report");
  app.add_option("--seed", o.seed, "seed for random sampling");

  std::map<CLI::App*, std::function<int(Session&)>> handlers;
  auto bind = [&](CLI::App* sub, int (*fn)(Session&, const Opts&)) {
    handlers[sub] = [fn, &o](Session& s) { return fn(s, o); };
  };

  auto* parse = app.add_subcommand("parse", "parse and print a polynomial");
  parse->add_option("poly", o.poly)->required();
  parse->add_option("--vars", o.vars, "comma-separated variables (default: as they appear)");
  bind(parse, cmd_parse);

  auto* gb = app.add_subcommand("gb", "reduced Groebner basis");
  gb->add_option("--poly", o.polys, "generator (repeatable); default: the workspace ideal");
  gb->add_option("--vars", o.vars);
  gb->add_option("--order", o.order, "grevlex or lex");
  gb->add_option("--precedence", o.precedence, "comma-separated variables, most significant first");
  bind(gb, cmd_gb);

  auto* check = app.add_subcommand("check-lnd", "certify local nilpotency");
  check->add_option("--derivation", o.derivation, "name, or inline images 'x=..; y=..'")->required();
  check->add_option("--max-iter", o.max_iter);
  bind(check, cmd_check_lnd);

  auto* bracket = app.add_subcommand("bracket", "Lie bracket of two fields");
  bracket->add_option("--left", o.left)->required();
  bracket->add_option("--right", o.right)->required();
  bind(bracket, cmd_bracket);

  auto* shear = app.add_subcommand("shear", "build f*D with D(f) = 0");
  shear->add_option("--derivation", o.derivation)->required();
  shear->add_option("--f", o.f)->required();
  bind(shear, cmd_shear);

  auto* oversh = app.add_subcommand("overshear", "build f*D with D^2(f) = 0");
  oversh->add_option("--derivation", o.derivation)->required();
  oversh->add_option("--f", o.f)->required();
  bind(oversh, cmd_overshear);

  auto* flow = app.add_subcommand("flow", "flow of an LND or an overshear");
  flow->add_option("--derivation", o.derivation, "LND name or inline images");
  flow->add_option("--f", o.f, "multiplier: flow the overshear f*D");
  flow->add_option("--overshear", o.overshear, "bundled overshear sample");
  flow->add_option("--time", o.time, "rational, Gaussian rational or float");
  flow->add_option("--at", o.at, "comma-separated point");
  bind(flow, cmd_flow);

  auto* flex = app.add_subcommand("flex", "rank of LND values against the tangent space");
  flex->add_option("--at", o.at);
  flex->add_option("--random", o.random, "number of random points");
  flex->add_option("--lnds", o.lnds, "comma-separated LND names (default: all)");
  bind(flex, cmd_flex);

  auto* sat = app.add_subcommand("saturate", "bounded Lie saturation of overshears");
  sat->add_option("--gen-deg", o.gen_deg, "multiplier degree of the overshear generators");
  sat->add_option("--target-deg", o.target_deg);
  sat->add_option("--work-deg", o.work_deg, "default: target + gen degree");
  sat->add_option("--max-len", o.max_len);
  sat->add_option("--lnds", o.lnds);
  bind(sat, cmd_saturate);

  auto* compat = app.add_subcommand("compat", "bounded compatible-pair check");
  compat->add_option("--theta", o.theta);
  compat->add_option("--xi", o.xi);
  compat->add_option("--ideal", o.ideal, "ideal generator (repeatable)");
  compat->add_option("--bound", o.bound);
  bind(compat, cmd_compat);

  auto* unit = app.add_subcommand("unit", "nonconstant units killed by every LND");
  unit->add_option("--f", o.f);
  unit->add_option("--g", o.g);
  bind(unit, cmd_unit);

  auto* dec = app.add_subcommand("decompose", "tame decomposition of a plane automorphism");
  dec->add_option("--map", o.map, "images separated by ';'")->required();
  dec->add_option("--vars", o.vars, "default x,y");
  dec->add_option("--max-steps", o.max_steps);
  bind(dec, cmd_decompose);

  auto* cmp = app.add_subcommand("compare", "compare two maps on a real grid");
  cmp->add_option("--left", o.left, "map 'p; q' or flow:<name>@<time>")->required();
  cmp->add_option("--right", o.right)->required();
  cmp->add_option("--vars", o.vars);
  cmp->add_option("--center", o.center);
  cmp->add_option("--radius", o.radius);
  cmp->add_option("--samples", o.samples);
  cmp->add_option("--tol", o.tol);
  bind(cmp, cmd_compare);

  auto* bfd = app.add_subcommand("bracket-fd", "flow difference quotient against the exact bracket");
  bfd->add_option("--theta", o.theta, "LND")->required();
  bfd->add_option("--other", o.xi, "field")->required();
  bfd->add_option("--at", o.at);
  bfd->add_option("--t", o.ts, "comma-separated step sizes");
  bfd->add_option("--ratio", o.ratio, "required error shrink factor per step");
  bind(bfd, cmd_bracket_fd);

  auto* bundle = app.add_subcommand("bundle", "catalog bundles");
  bundle->require_subcommand(1);
  auto* blist = bundle->add_subcommand("list");
  bind(blist, cmd_bundle_list);
  auto* bshow = bundle->add_subcommand("show");
  bshow->add_option("name", o.name);
  handlers[bshow] = [&o](Session& s) {
    if (!o.name.empty()) o.bundle = o.name;
    return cmd_bundle_show(s, o);
  };

  std::vector<std::string> storage{"lnd-lab"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kVerified : kUsageError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  if (chosen == bundle) chosen = bundle->get_subcommands().front();

  Session s(o);
  int code = kVerified;
  std::string failure;
  try {
    code = handlers.at(chosen)(s);
  } catch (const InvariantFailure& e) {
    code = kInvariantFailure;
    failure = std::string("invariant failure: ") + e.what();
  } catch (const UncertifiedDerivation& e) {
    code = kNotVerified;
    failure = std::string("not certified: ") + e.what();
  } catch (const Error& e) {
    code = kUsageError;
    failure = std::string("error: ") + e.what();
  } catch (const nlohmann::json::exception& e) {
    code = kUsageError;
    failure = std::string("bad spec file: ") + e.what();
  } catch (const std::logic_error& e) {
    code = kUsageError;
    failure = std::string("error: ") + e.what();
  } catch (const std::exception& e) {
    code = kInvariantFailure;
    failure = std::string("internal error: ") + e.what();
  }

  if (!failure.empty()) err << failure << "\n";
  if (o.json) {
    json doc = s.rep;
    doc["schema"] = 1;
    doc["command"] = chosen->get_parent() == bundle ? "bundle " + chosen->get_name() : chosen->get_name();
    doc["inputs"] = {{"argv", args}};
    doc["exit_code"] = code;
    if (!failure.empty()) doc["error"] = failure;
    out << doc.dump(2) << "\n";
  } else {
    out << s.text.str();
  }
  return code;
}

}  // namespace lnd::cli
