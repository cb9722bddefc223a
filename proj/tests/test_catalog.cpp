#include <gtest/gtest.h>

#include <algorithm>

#include "lndlab/catalog/catalog.hpp"
#include "lndlab/denslab/units.hpp"
#include "lndlab/errors.hpp"
#include "lndlab/fields/flow.hpp"
#include "lndlab/polyalg/parser.hpp"

using namespace lnd;
using namespace lnd::catalog;
using fields::RingElement;

namespace {

RingElement elem(const VarietyBundle& b, const std::string& s) { return RingElement(b.variety, b.variety->parse(s)); }

std::vector<std::string> overshear_names(const VarietyBundle& b) {
  std::vector<std::string> out;
  for (const auto& o : b.overshear_samples) out.push_back(o.name);
  return out;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

// Leibniz oracle: D applied to a polynomial, computed term by term from the images.
polyalg::Polynomial leibniz(const fields::Derivation& d, const polyalg::Polynomial& f) {
  const auto& ring = f.ring();
  polyalg::Polynomial out(ring);
  for (std::size_t i = 0; i < ring.arity(); ++i) out = out + polyalg::partial(f, ring.var(i)) * d.image(i);
  return out;
}

}  // namespace

TEST(AffineSpace, TwoDimensional) {
  const auto b = affine_space(2);
  EXPECT_EQ(b.lnd_names(), (std::vector<std::string>{"dx", "dy"}));
  const auto names = overshear_names(b);
  EXPECT_TRUE(contains(names, "x2dy"));
  EXPECT_TRUE(contains(names, "xydy"));
  EXPECT_TRUE(b.overshear("x2dy").is_shear());
  EXPECT_FALSE(b.overshear("xydy").is_shear());
  EXPECT_EQ(b.overshear("xydy").a(), elem(b, "x"));
  EXPECT_EQ(b.lnd("dy").certificate().indices, (std::vector<int>{1, 2}));
  EXPECT_THROW(b.lnd("dz"), std::out_of_range);
  EXPECT_THROW(b.overshear("nope"), std::out_of_range);
}

TEST(AffineSpace, OneAndThree) {
  const auto one = affine_space(1);
  EXPECT_EQ(one.lnd_names(), (std::vector<std::string>{"dz"}));
  EXPECT_EQ(affine_space(3).lnds.size(), 3u);
  EXPECT_EQ(affine_space(4).lnd_names(), (std::vector<std::string>{"dz1", "dz2", "dz3", "dz4"}));
  EXPECT_THROW(affine_space(0), std::invalid_argument);
}

TEST(Danielewski, ClassicalSurface) {
  const auto b = danielewski("z^2", 1);
  EXPECT_EQ(b.lnds.size(), 2u);
  const auto& tu = b.lnd("theta_u").derivation();
  EXPECT_EQ(tu.apply(b.variety->parse("z")), b.variety->parse("u"));
  EXPECT_EQ(tu.apply(b.variety->parse("v")), b.variety->parse("2*z"));
  EXPECT_TRUE(tu.apply(b.variety->parse("u")).is_zero());
  const auto& tv = b.lnd("theta_v").derivation();
  EXPECT_EQ(tv.apply(b.variety->parse("u")), b.variety->parse("2*z"));
  EXPECT_TRUE(b.pair_candidates.empty());
}

TEST(Danielewski, CubicDerivative) {
  const auto b = danielewski("z^3 - 1", 1);
  const auto& tu = b.lnd("theta_u").derivation();
  EXPECT_EQ(tu.apply(b.variety->parse("v")), b.variety->parse("3*z^2"));
}

TEST(Danielewski, TwoVariables) {
  const auto b = danielewski("z1^2 + z2^2 - 1", 2);
  EXPECT_EQ(b.lnds.size(), 4u);
  ASSERT_FALSE(b.pair_candidates.empty());
  const auto& [theta_name, xi_name] = b.pair_candidates.front();
  const auto& theta = b.lnd(theta_name).derivation();
  const auto& xi = b.lnd(xi_name).derivation();
  const auto z1 = elem(b, "z1");
  EXPECT_EQ(theta.apply(z1), elem(b, "u"));
  EXPECT_TRUE(theta.apply_power(z1, 2).is_zero());
  EXPECT_TRUE(xi.apply(z1).is_zero());
}

TEST(Danielewski, RejectsConstantAndZeroArity) {
  EXPECT_THROW(danielewski("3", 1), std::invalid_argument);
  EXPECT_THROW(danielewski("z", 0), std::invalid_argument);
}

TEST(Danielewski, TangencyMatchesLeibnizOracle) {
  for (const char* p : {"z^2", "z^3 - 1", "z^4 + z"}) {
    const auto b = danielewski(p, 1);
    for (const auto& d : b.all_lnds()) {
      for (const auto& q : b.variety->defining()) {
        EXPECT_TRUE(b.variety->reduce(leibniz(d.derivation(), q)).is_zero()) << p;
      }
    }
  }
}

TEST(Sl2, FieldsAndTangency) {
  const auto b = sl2();
  EXPECT_EQ(b.lnds.size(), 5u);
  const auto& ae12 = b.lnd("Ae12").derivation();
  EXPECT_EQ(ae12.apply(b.variety->parse("b")), b.variety->parse("a"));
  EXPECT_EQ(ae12.apply(b.variety->parse("d")), b.variety->parse("c"));
  EXPECT_TRUE(ae12.apply(b.variety->parse("a")).is_zero());
  EXPECT_TRUE(leibniz(ae12, b.variety->parse("a*d - b*c")).is_zero());
  const std::vector<Coeff> identity{Coeff(1), Coeff(0), Coeff(0), Coeff(1)};
  EXPECT_TRUE(std::any_of(b.points.begin(), b.points.end(), [&](const auto& p) { return p == identity; }));
  EXPECT_TRUE(b.units.empty());
}

TEST(Gl2, UnitsAndTangency) {
  const auto b = gl2();
  ASSERT_FALSE(b.units.empty());
  const auto det = elem(b, "a*d - b*c");
  const auto w = elem(b, "w");
  EXPECT_TRUE(denslab::verify_unit_witness(*b.variety, det, w));
  for (const auto& d : b.all_lnds()) {
    EXPECT_TRUE(denslab::lnd_annihilates_units(d, det, w));
    EXPECT_TRUE(d.derivation().apply(w).is_zero());
    EXPECT_TRUE(b.variety->reduce(leibniz(d.derivation(), b.variety->parse("w*(a*d - b*c) - 1"))).is_zero());
  }
}

TEST(KorasRussell, IndicesAndFixedAxis) {
  const auto b = koras_russell();
  const auto x = elem(b, "x");
  for (const auto& d : b.all_lnds()) EXPECT_TRUE(d.derivation().apply(x).is_zero());
  // Chain on y for D1: -3v^2 -> -6v*x^2 -> -6x^4 -> 0.
  const auto& d1 = b.lnd("D1").derivation();
  const auto y = elem(b, "y");
  EXPECT_EQ(d1.apply(y), elem(b, "-3*v^2"));
  EXPECT_EQ(d1.apply_power(y, 2), elem(b, "-6*v*x^2"));
  EXPECT_EQ(d1.apply_power(y, 3), elem(b, "-6*x^4"));
  EXPECT_TRUE(d1.apply_power(y, 4).is_zero());
  const auto& ring = b.variety->ring();
  EXPECT_EQ(b.lnd("D1").certificate().indices[ring.require_index("y")], 4);
}

TEST(BundleByName, ParsesKnownNames) {
  EXPECT_EQ(bundle_by_name("cn:3").lnds.size(), 3u);
  EXPECT_EQ(bundle_by_name("danielewski:p=z^2").lnds.size(), 2u);
  EXPECT_EQ(bundle_by_name("danielewski:p=z1^2+z2^2-1:n=2").lnds.size(), 4u);
  EXPECT_EQ(bundle_by_name("sl2").name, sl2().name);
  EXPECT_EQ(bundle_by_name("gl2").lnds.size(), gl2().lnds.size());
  EXPECT_EQ(bundle_by_name("koras-russell").lnds.size(), 2u);
  for (const auto& name : bundle_names()) EXPECT_NO_THROW(bundle_by_name(name)) << name;
}

TEST(BundleByName, RejectsUnknown) {
  EXPECT_THROW(bundle_by_name("sl3"), std::invalid_argument);
  EXPECT_THROW(bundle_by_name("danielewski:q=z"), std::invalid_argument);
  EXPECT_THROW(bundle_by_name("cn:x"), std::exception);
  EXPECT_THROW(bundle_by_name("danielewski:p=1"), std::invalid_argument);
}

// ---------------------------------------------------------------- properties

TEST(CatalogProperty, EveryBundleSelfConsistent) {
  for (const auto& name : bundle_names()) {
    const auto b = bundle_by_name(name);
    for (const auto& [lname, lnd] : b.lnds) {
      EXPECT_TRUE(lnd.replay()) << name << " " << lname;
      const auto verdict = fields::check_lnd(lnd.derivation());
      ASSERT_TRUE(verdict.nilpotent()) << name << " " << lname;
      EXPECT_EQ(verdict.lnd().certificate().indices, lnd.certificate().indices);
      EXPECT_TRUE(fields::flow_lnd(lnd).preserves_ideal()) << name << " " << lname;
    }
    for (const auto& [oname, o] : b.overshear_samples) {
      EXPECT_TRUE(o.base().derivation().apply(o.a()).is_zero()) << name << " " << oname;
      EXPECT_EQ(o.base().derivation().apply(o.f()), o.a()) << name << " " << oname;
    }
    for (const auto& p : b.points) EXPECT_TRUE(b.variety->contains_point(p)) << name;
    for (const auto& [t, x] : b.pair_candidates) {
      EXPECT_NO_THROW(b.lnd(t));
      EXPECT_NO_THROW(b.lnd(x));
    }
    for (const auto& u : b.units) {
      for (const auto& d : b.all_lnds()) EXPECT_TRUE(denslab::lnd_annihilates_units(d, u.f, u.g)) << name;
    }
  }
}
