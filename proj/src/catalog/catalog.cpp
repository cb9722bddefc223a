#include "lndlab/catalog/catalog.hpp"

#include <stdexcept>

#include "lndlab/denslab/units.hpp"
#include "lndlab/errors.hpp"
#include "lndlab/fields/flow.hpp"
#include "lndlab/polyalg/parser.hpp"

namespace lnd::catalog {

using fields::AffineVariety;
using fields::Derivation;
using polyalg::Ring;

namespace {

Lnd certified(const std::string& bundle, const std::string& name, const VarietyPtr& v,
              const std::vector<std::pair<std::string, std::string>>& images) {
  try {
    return fields::certify(fields::make_derivation(v, images));
  } catch (const Error& e) {
    throw InvariantFailure(bundle + ": LND '" + name + "' failed validation: " + e.what());
  }
}

OvershearField overshear(const std::string& bundle, const std::string& name, const Lnd& base, const VarietyPtr& v,
                         const std::string& f) {
  try {
    return fields::make_overshear(base, RingElement(v, v->parse(f))).with_label(name);
  } catch (const Error& e) {
    throw InvariantFailure(bundle + ": overshear '" + name + "' failed validation: " + e.what());
  }
}

std::vector<Coeff> point(std::initializer_list<Coeff> coords) { return std::vector<Coeff>(coords); }

void validate(const VarietyBundle& b) {
  for (const auto& [name, lnd] : b.lnds) {
    if (!lnd.replay()) throw InvariantFailure(b.name + ": certificate of '" + name + "' does not replay");
    fields::flow_lnd(lnd);
  }
  for (const auto& u : b.units) {
    if (!denslab::verify_unit_witness(*b.variety, u.f, u.g)) {
      throw InvariantFailure(b.name + ": unit witness (" + u.f.to_string() + ", " + u.g.to_string() + ") fails");
    }
  }
  for (const auto& p : b.points) {
    if (!b.variety->contains_point(p)) throw InvariantFailure(b.name + ": fixture point is not on the variety");
  }
  for (const auto& [t, x] : b.pair_candidates) {
    b.lnd(t);
    b.lnd(x);
  }
}

std::vector<std::string> affine_vars(int n) {
  if (n == 1) return {"z"};
  if (n == 2) return {"x", "y"};
  if (n == 3) return {"x", "y", "z"};
  std::vector<std::string> vars;
  for (int i = 1; i <= n; ++i) vars.push_back("z" + std::to_string(i));
  return vars;
}

}  // namespace

const Lnd& VarietyBundle::lnd(const std::string& wanted) const {
  for (const auto& l : lnds) {
    if (l.name == wanted) return l.value;
  }
  throw std::out_of_range("bundle " + name + " has no LND named '" + wanted + "'");
}

const OvershearField& VarietyBundle::overshear(const std::string& wanted) const {
  for (const auto& o : overshear_samples) {
    if (o.name == wanted) return o.value;
  }
  throw std::out_of_range("bundle " + name + " has no overshear named '" + wanted + "'");
}

std::vector<Lnd> VarietyBundle::all_lnds() const {
  std::vector<Lnd> out;
  for (const auto& l : lnds) out.push_back(l.value);
  return out;
}

std::vector<std::string> VarietyBundle::lnd_names() const {
  std::vector<std::string> out;
  for (const auto& l : lnds) out.push_back(l.name);
  return out;
}

VarietyBundle affine_space(int n) {
  if (n < 1) throw std::invalid_argument("affine space needs n >= 1");
  const std::string name = "cn:" + std::to_string(n);
  const auto vars = affine_vars(n);
  auto v = AffineVariety::create(name, Ring(vars), {});
  VarietyBundle b{name, v, {}, {}, {}, {}, {}, {}, ""};
  for (const auto& x : vars) b.lnds.push_back({"d" + x, certified(name, "d" + x, v, {{x, "1"}})});
  if (n >= 2) {
    // For each direction j: a shear (other)^2 * d_j and an overshear (other) * x_j * d_j.
    for (int j = 0; j < n; ++j) {
      const std::string& xj = vars[j];
      const std::string& other = vars[(j + n - 1) % n];
      const Lnd& base = b.lnd("d" + xj);
      b.overshear_samples.push_back({other + "2d" + xj, overshear(name, other + "2d" + xj, base, v, other + "^2")});
      b.overshear_samples.push_back(
          {other + xj + "d" + xj, overshear(name, other + xj + "d" + xj, base, v, other + "*" + xj)});
    }
  } else {
    b.overshear_samples.push_back({"zdz", overshear(name, "zdz", b.lnd("dz"), v, "z")});
  }
  b.ideal_candidates.emplace_back(v, Polynomial::constant(v->ring(), 1));
  if (n >= 2) b.pair_candidates.emplace_back("d" + vars[0], "d" + vars[1]);
  b.points.push_back(std::vector<Coeff>(n, Coeff()));
  std::vector<Coeff> p;
  for (int i = 0; i < n; ++i) p.push_back(Coeff::fraction(i + 1, 2));
  b.points.push_back(p);
  b.notes = "Affine space with the coordinate LNDs; coordinate shears and overshears as samples.";
  validate(b);
  return b;
}

VarietyBundle danielewski(const Polynomial& p, int n) {
  if (n < 1) throw std::invalid_argument("danielewski needs n >= 1");
  if (p.is_constant()) throw std::invalid_argument("danielewski polynomial must be nonconstant");
  std::vector<std::string> zs;
  if (n == 1) {
    zs.push_back("z");
  } else {
    for (int i = 1; i <= n; ++i) zs.push_back("z" + std::to_string(i));
  }
  std::vector<std::string> vars = zs;
  vars.push_back("u");
  vars.push_back("v");
  const Ring ring(vars);
  const Polynomial pp = polyalg::embed(p, ring);
  const std::string name = "danielewski:p=" + p.to_string() + ":n=" + std::to_string(n);

  std::vector<std::string> precedence{"u", "v"};
  precedence.insert(precedence.end(), zs.begin(), zs.end());
  auto order = idealquot::MonomialOrder::make(idealquot::OrderKind::grevlex, ring, precedence);
  auto v = AffineVariety::create(
      name, ring, {Polynomial::variable(ring, "u") * Polynomial::variable(ring, "v") - pp}, order);

  VarietyBundle b{name, v, {}, {}, {}, {}, {}, {}, ""};
  for (std::size_t i = 0; i < zs.size(); ++i) {
    const std::string dp = polyalg::partial(pp, zs[i]).to_string();
    const std::string suffix = n == 1 ? "" : std::to_string(i + 1);
    b.lnds.push_back({"theta" + suffix + "_u", certified(name, "theta" + suffix + "_u", v, {{zs[i], "u"}, {"v", dp}})});
    b.lnds.push_back({"theta" + suffix + "_v", certified(name, "theta" + suffix + "_v", v, {{zs[i], "v"}, {"u", dp}})});
  }
  {
    const std::string s1 = n == 1 ? "" : "1";
    const Lnd& tu = b.lnd("theta" + s1 + "_u");
    b.overshear_samples.push_back({"u*theta" + s1 + "_u", overshear(name, "u*theta" + s1 + "_u", tu, v, "u")});
    b.overshear_samples.push_back(
        {zs[0] + "*theta" + s1 + "_u", overshear(name, zs[0] + "*theta" + s1 + "_u", tu, v, zs[0])});
    const Lnd& tv = b.lnd("theta" + s1 + "_v");
    b.overshear_samples.push_back(
        {zs[0] + "*theta" + s1 + "_v", overshear(name, zs[0] + "*theta" + s1 + "_v", tv, v, zs[0])});
  }
  if (n >= 2) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i != j) b.pair_candidates.emplace_back("theta" + std::to_string(i) + "_u", "theta" + std::to_string(j) + "_v");
      }
    }
    b.ideal_candidates.emplace_back(v, v->parse("u*z1"));
  }
  // Fixture point: z = 0 except possibly solved through u = 1, v = p(z).
  {
    std::vector<Coeff> pt(vars.size(), Coeff());
    pt[zs.size()] = 1;
    std::vector<Coeff> zpt(zs.size(), Coeff());
    pt[zs.size() + 1] = polyalg::evaluate_exact(p, zpt);
    b.points.push_back(pt);
    std::vector<Coeff> pt2(vars.size(), Coeff());
    for (std::size_t i = 0; i < zs.size(); ++i) {
      pt2[i] = 1;
      zpt[i] = 1;
    }
    pt2[zs.size()] = 2;
    pt2[zs.size() + 1] = polyalg::evaluate_exact(p, zpt) / Coeff(2);
    b.points.push_back(pt2);
  }
  b.notes =
      "Hypersurface uv = p(z). The LNDs send z_i to u (resp. v) and v (resp. u) to dp/dz_i; this sign "
      "arrangement is the tangent one. The other arrangement dp/dz_i d/du - u d/dz_i is not tangent to "
      "uv = p and is not used. Smoothness of the zero fibre of p is assumed, not checked.";
  validate(b);
  return b;
}

VarietyBundle danielewski(const std::string& p, int n) {
  if (n < 1) throw std::invalid_argument("danielewski needs n >= 1");
  std::vector<std::string> zs;
  if (n == 1) {
    zs.push_back("z");
  } else {
    for (int i = 1; i <= n; ++i) zs.push_back("z" + std::to_string(i));
  }
  return danielewski(polyalg::parse_poly(p, Ring(zs)), n);
}

VarietyBundle sl2() {
  const std::string name = "sl2";
  const Ring ring({"a", "b", "c", "d"});
  auto v = AffineVariety::create(name, ring, {polyalg::parse_poly("a*d - b*c - 1", ring)});
  VarietyBundle b{name, v, {}, {}, {}, {}, {}, {}, ""};
  // One-sided unipotent fields: A -> A*E and A -> E*A for E = e12, e21.
  b.lnds.push_back({"Ae12", certified(name, "Ae12", v, {{"b", "a"}, {"d", "c"}})});
  b.lnds.push_back({"Ae21", certified(name, "Ae21", v, {{"a", "b"}, {"c", "d"}})});
  b.lnds.push_back({"e12A", certified(name, "e12A", v, {{"a", "c"}, {"b", "d"}})});
  b.lnds.push_back({"e21A", certified(name, "e21A", v, {{"c", "a"}, {"d", "b"}})});
  // E'*A with the nilpotent E' = [[1, -1], [1, -1]].
  b.lnds.push_back({"EpA", certified(name, "EpA", v, {{"a", "a - c"}, {"b", "b - d"}, {"c", "a - c"}, {"d", "b - d"}})});
  b.overshear_samples.push_back({"a*Ae12", overshear(name, "a*Ae12", b.lnd("Ae12"), v, "a")});
  b.overshear_samples.push_back({"b*Ae12", overshear(name, "b*Ae12", b.lnd("Ae12"), v, "b")});
  b.overshear_samples.push_back({"c*e21A", overshear(name, "c*e21A", b.lnd("e21A"), v, "c")});
  b.pair_candidates.emplace_back("Ae12", "e21A");
  b.points.push_back(point({1, 0, 0, 1}));
  b.points.push_back(point({2, 1, 1, 1}));
  b.points.push_back(point({1, 2, 0, 1}));
  b.notes = "SL2 as {ad - bc = 1}; unipotent one-sided fields plus E'*A. No nonconstant units.";
  validate(b);
  return b;
}

VarietyBundle gl2() {
  const std::string name = "gl2";
  const Ring ring({"a", "b", "c", "d", "w"});
  auto v = AffineVariety::create(name, ring, {polyalg::parse_poly("w*(a*d - b*c) - 1", ring)});
  VarietyBundle b{name, v, {}, {}, {}, {}, {}, {}, ""};
  b.lnds.push_back({"Ae12", certified(name, "Ae12", v, {{"b", "a"}, {"d", "c"}})});
  b.lnds.push_back({"Ae21", certified(name, "Ae21", v, {{"a", "b"}, {"c", "d"}})});
  b.lnds.push_back({"e12A", certified(name, "e12A", v, {{"a", "c"}, {"b", "d"}})});
  b.lnds.push_back({"e21A", certified(name, "e21A", v, {{"c", "a"}, {"d", "b"}})});
  b.overshear_samples.push_back({"a*Ae12", overshear(name, "a*Ae12", b.lnd("Ae12"), v, "a")});
  b.overshear_samples.push_back({"b*Ae12", overshear(name, "b*Ae12", b.lnd("Ae12"), v, "b")});
  b.units.push_back({RingElement(v, v->parse("a*d - b*c")), RingElement(v, v->parse("w"))});
  b.units.push_back({RingElement(v, v->parse("w")), RingElement(v, v->parse("a*d - b*c"))});
  b.points.push_back(point({1, 0, 0, 1, 1}));
  b.points.push_back(point({2, 1, 1, 1, 1}));
  b.notes = "GL2 as {w(ad - bc) = 1}; LNDs fix w. The determinant is a nonconstant unit.";
  validate(b);
  return b;
}

VarietyBundle koras_russell() {
  const std::string name = "koras-russell";
  const Ring ring({"x", "y", "u", "v"});
  auto v = AffineVariety::create(name, ring, {polyalg::parse_poly("x + x^2*y + u^2 + v^3", ring)});
  VarietyBundle b{name, v, {}, {}, {}, {}, {}, {}, ""};
  b.lnds.push_back({"D1", certified(name, "D1", v, {{"v", "x^2"}, {"y", "-3*v^2"}})});
  b.lnds.push_back({"D2", certified(name, "D2", v, {{"u", "x^2"}, {"y", "-2*u"}})});
  b.overshear_samples.push_back({"x*D1", overshear(name, "x*D1", b.lnd("D1"), v, "x")});
  b.overshear_samples.push_back({"v*D1", overshear(name, "v*D1", b.lnd("D1"), v, "v")});
  b.overshear_samples.push_back({"u*D2", overshear(name, "u*D2", b.lnd("D2"), v, "u")});
  b.points.push_back(point({0, 0, 0, 0}));
  b.points.push_back(point({-1, -1, 1, 1}));
  b.notes = "Cubic x + x^2 y + u^2 + v^3 = 0. Both bundled LNDs kill x; this is a sample, not a classification.";
  validate(b);
  return b;
}

VarietyBundle bundle_by_name(const std::string& spec) {
  if (spec == "sl2") return sl2();
  if (spec == "gl2") return gl2();
  if (spec == "koras-russell") return koras_russell();
  if (spec.rfind("cn:", 0) == 0) {
    const int n = std::stoi(spec.substr(3));
    return affine_space(n);
  }
  if (spec.rfind("danielewski:", 0) == 0) {
    // danielewski:p=<poly>:n=<k>; the n field is optional and defaults to 1.
    std::string rest = spec.substr(12);
    int n = 1;
    const auto npos = rest.rfind(":n=");
    if (npos != std::string::npos) {
      n = std::stoi(rest.substr(npos + 3));
      rest = rest.substr(0, npos);
    }
    if (rest.rfind("p=", 0) != 0) throw std::invalid_argument("danielewski bundle needs p=<poly>");
    return danielewski(rest.substr(2), n);
  }
  throw std::invalid_argument("unknown bundle '" + spec + "'");
}

std::vector<std::string> bundle_names() {
  return {"cn:2", "danielewski:p=z^2", "danielewski:p=z1^2+z2^2-1:n=2", "sl2", "gl2", "koras-russell"};
}

}  // namespace lnd::catalog
