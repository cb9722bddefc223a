#include <gtest/gtest.h>

#include <cstdlib>

#include "lndlab/catalog/catalog.hpp"
#include "lndlab/denslab/compat.hpp"
#include "lndlab/denslab/kernel.hpp"
#include "lndlab/denslab/linalg.hpp"
#include "lndlab/denslab/saturate.hpp"
#include "lndlab/denslab/tangent.hpp"
#include "lndlab/denslab/units.hpp"
#include "lndlab/errors.hpp"
#include "lndlab/polyalg/parser.hpp"
#include "support.hpp"

using namespace lnd;
using namespace lnd::denslab;
using fields::AffineVariety;
using fields::Derivation;
using fields::Lnd;
using fields::RingElement;
using lnd::testing_support::random_coeff;
using lnd::testing_support::uniform;
using polyalg::Monomial;
using polyalg::Polynomial;
using polyalg::Ring;

namespace {

RingElement E(const fields::VarietyPtr& x, const std::string& s) { return RingElement(x, x->parse(s)); }

Lnd L(const fields::VarietyPtr& x, std::vector<std::pair<std::string, std::string>> images) {
  return fields::certify(fields::make_derivation(x, images));
}

// Span membership oracle on plain coefficient maps.
bool in_span(const std::vector<RingElement>& basis, const RingElement& target) {
  EchelonSpan<Monomial> span;
  auto as_vec = [](const RingElement& e) {
    EchelonSpan<Monomial>::Vector v;
    for (const auto& [m, c] : e.rep().terms()) v[m] = c;
    return v;
  };
  for (const auto& b : basis) span.insert(as_vec(b));
  return span.contains(as_vec(target));
}

bool independent(const std::vector<RingElement>& basis) {
  EchelonSpan<Monomial> span;
  for (const auto& b : basis) {
    EchelonSpan<Monomial>::Vector v;
    for (const auto& [m, c] : b.rep().terms()) v[m] = c;
    if (!span.insert(v)) return false;
  }
  return true;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Matrix random_matrix(std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = uniform(0, 2) == 0 ? Coeff(0) : random_coeff(4);
  }
  return m;
}

Matrix product(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      for (std::size_t k = 0; k < a.cols(); ++k) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  }
  return out;
}

std::vector<fields::OvershearField> all_generators(const catalog::VarietyBundle& b, long deg) {
  return overshear_generators(b.all_lnds(), b.lnd_names(), deg);
}

}  // namespace

TEST(Linalg, SmallRanks) {
  EXPECT_EQ(rank(Matrix::from_rows({{1, 2}, {2, 4}}, 2)), 1u);
  EXPECT_EQ(rank(Matrix::from_rows({{1, 2}, {3, 4}}, 2)), 2u);
  EXPECT_EQ(rank(Matrix(3, 3)), 0u);
  const Coeff i = Coeff::imaginary_unit();
  // rows (1, i) and (i, -1) are proportional by i
  EXPECT_EQ(rank(Matrix::from_rows({{1, i}, {i, -1}}, 2)), 1u);
  EXPECT_EQ(rank(Matrix::from_rows({{Coeff::fraction(1, 3), Coeff::fraction(1, 2)}, {2, 3}}, 2)), 1u);
}

TEST(Linalg, RankAgreesWithRrefAndFactorization) {
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t r = static_cast<std::size_t>(uniform(1, 4));
    const auto a = random_matrix(static_cast<std::size_t>(uniform(1, 6)), r);
    const auto b = random_matrix(r, static_cast<std::size_t>(uniform(1, 6)));
    const auto m = product(a, b);
    const std::size_t k = rank(m);
    ASSERT_EQ(k, rref(m).pivots.size());
    ASSERT_LE(k, r);
    const auto ns = nullspace(m);
    ASSERT_EQ(ns.size(), m.cols() - k);
    for (const auto& v : ns) {
      for (std::size_t row = 0; row < m.rows(); ++row) {
        Coeff acc;
        for (std::size_t c = 0; c < m.cols(); ++c) acc += m.at(row, c) * v[c];
        ASSERT_TRUE(acc.is_zero());
      }
    }
  }
}

TEST(Linalg, EchelonSpanTracksCombinations) {
  EchelonSpan<int> span;
  EXPECT_TRUE(span.insert({{2, Coeff(1)}, {1, Coeff(1)}}, {{0, Coeff(1)}}));
  EXPECT_TRUE(span.insert({{2, Coeff(1)}, {0, Coeff(1)}}, {{1, Coeff(1)}}));
  EXPECT_FALSE(span.insert({{1, Coeff(2)}, {0, Coeff(-2)}}));
  EXPECT_TRUE(span.contains({{1, Coeff(1)}, {0, Coeff(-1)}}));
  EXPECT_FALSE(span.contains({{0, Coeff(1)}}));
  // second row is (0, -1, 1) = v1 - v0 with the combination recorded
  const auto& row = span.rows()[1];
  EXPECT_EQ(row.vec.begin()->first, 1);
  EXPECT_EQ(row.combo.at(0), Coeff(1));
  EXPECT_EQ(row.combo.at(1), Coeff(-1));
}

TEST(Kernel, WorkedExamples) {
  const auto c2 = catalog::affine_space(2);
  const auto& x = c2.variety;
  const auto k1 = kernel_basis(c2.lnd("dy").derivation(), 1, 2);
  ASSERT_EQ(k1.size(), 3u);
  for (const auto* s : {"1", "x", "x^2"}) EXPECT_TRUE(in_span(k1, E(x, s))) << s;
  const auto k2 = kernel_basis(c2.lnd("dy").derivation(), 2, 1);
  ASSERT_EQ(k2.size(), 3u);
  for (const auto* s : {"1", "x", "y"}) EXPECT_TRUE(in_span(k2, E(x, s))) << s;

  const auto d = catalog::danielewski("z^2", 1);
  const auto k3 = kernel_basis(d.lnd("theta_u").derivation(), 1, 1);
  ASSERT_EQ(k3.size(), 2u);
  EXPECT_TRUE(in_span(k3, E(d.variety, "1")));
  EXPECT_TRUE(in_span(k3, E(d.variety, "u")));
}

TEST(Kernel, PropertiesOnCatalog) {
  for (const auto& b : {catalog::sl2(), catalog::danielewski("z^3 - 1", 1), catalog::koras_russell()}) {
    for (const auto& l : b.lnds) {
      for (unsigned power : {1u, 2u}) {
        std::size_t prev = 0;
        for (long bound = 0; bound <= 3; ++bound) {
          const auto k = kernel_basis(l.value.derivation(), power, bound);
          ASSERT_TRUE(independent(k));
          for (const auto& f : k) {
            ASSERT_TRUE(l.value.derivation().apply_power(f, power).is_zero());
            ASSERT_LE(f.degree(), bound);
          }
          ASSERT_GE(k.size(), prev);
          prev = k.size();
        }
      }
    }
  }
}

TEST(Tangent, WorkedExamples) {
  const auto c3 = catalog::affine_space(3);
  const std::vector<Coeff> p3{1, 2, 3};
  EXPECT_EQ(tangent_basis(*c3.variety, p3).size(), 3u);

  const auto sl = catalog::sl2();
  const std::vector<Coeff> id{1, 0, 0, 1};
  const auto tb = tangent_basis(*sl.variety, id);
  ASSERT_EQ(tb.size(), 3u);
  std::vector<RingElement> rows;
  // membership of (1,0,0,-1) by rank: appending it must not raise the rank
  std::vector<Vec> with = tb;
  with.push_back({1, 0, 0, -1});
  EXPECT_EQ(rank(Matrix::from_rows(with, 4)), 3u);
  for (const auto& v : tb) EXPECT_EQ(v[0] + v[3], Coeff(0));

  const auto dan = catalog::danielewski("z^2 - 1", 1);
  const std::vector<Coeff> q{1, 1, 0};
  EXPECT_EQ(tangent_basis(*dan.variety, q).size(), 2u);
  const std::vector<Coeff> off{1, 1, 1};
  EXPECT_THROW(tangent_basis(*dan.variety, off), PointNotOnVariety);
}

TEST(Flex, WorkedExamples) {
  const auto c2 = catalog::affine_space(2);
  const std::vector<Coeff> p{3, -1};
  const auto r = flexible_at(*c2.variety, c2.all_lnds(), p);
  EXPECT_EQ(r.rank, 2u);
  EXPECT_TRUE(r.spans);

  const auto sl = catalog::sl2();
  const std::vector<Coeff> id{1, 0, 0, 1};
  std::vector<Lnd> four;
  for (const auto* n : {"Ae12", "Ae21", "e12A", "e21A"}) four.push_back(sl.lnd(n));
  const auto r4 = flexible_at(*sl.variety, four, id);
  EXPECT_EQ(r4.rank, 2u);
  EXPECT_EQ(r4.tangent_dim, 3u);
  EXPECT_FALSE(r4.spans);
  four.push_back(sl.lnd("EpA"));
  const auto r5 = flexible_at(*sl.variety, four, id);
  EXPECT_EQ(r5.rank, 3u);
  EXPECT_TRUE(r5.spans);
  EXPECT_EQ(r5.lnd_values.back(), (Vec{1, -1, 1, -1}));
}

TEST(Flex, RandomPointsLieOnVariety) {
  std::mt19937_64 rng(7);
  for (const auto& b : {catalog::sl2(), catalog::gl2(), catalog::koras_russell(), catalog::danielewski("z^2 - 1", 1),
                        catalog::affine_space(4)}) {
    for (int i = 0; i < 10; ++i) {
      const auto p = random_point(*b.variety, rng);
      ASSERT_TRUE(b.variety->contains_point(p)) << b.name;
    }
  }
}

TEST(DenslabProperty, FlexRankInvariantUnderScaling) {
  std::mt19937_64 rng(11);
  for (const auto& b : {catalog::sl2(), catalog::gl2(), catalog::danielewski("z^2 - 1", 1)}) {
    for (int i = 0; i < 10; ++i) {
      const auto p = random_point(*b.variety, rng);
      std::vector<Lnd> scaled;
      for (const auto& l : b.lnds) {
        Coeff c = random_coeff(4);
        scaled.push_back(fields::certify(l.value.derivation() * c));
      }
      ASSERT_EQ(flexible_at(*b.variety, b.all_lnds(), p).rank, flexible_at(*b.variety, scaled, p).rank);
      const auto r = flexible_at(*b.variety, b.all_lnds(), p);
      ASSERT_EQ(r.spans, r.rank == r.tangent_dim);
      ASSERT_LE(r.tangent_dim, b.variety->arity());
    }
  }
}

TEST(Saturate, TangentFieldDimClosedForm) {
  for (int n = 1; n <= 3; ++n) {
    const auto b = catalog::affine_space(n);
    for (long d = 0; d <= 3; ++d) {
      EXPECT_EQ(tangent_field_dim(*b.variety, d), static_cast<std::size_t>(n) * binomial(n + d, d));
    }
  }
}

TEST(Saturate, LineIsNotCertified) {
  const auto c1 = catalog::affine_space(1);
  const auto gens = all_generators(c1, 2);
  ASSERT_EQ(gens.size(), 2u);
  const auto r = lie_saturate(gens, 2, 4, 4);
  EXPECT_EQ(r.span_dim, 2u);
  EXPECT_EQ(r.target_dim, 3u);
  EXPECT_FALSE(r.certified);
  EXPECT_TRUE(replay_witnesses(r, gens));
}

TEST(Saturate, PlaneAffineFieldsCertified) {
  const auto c2 = catalog::affine_space(2);
  const auto gens = all_generators(c2, 3);
  const auto r = lie_saturate(gens, 1, 3, 2);
  EXPECT_EQ(r.target_dim, 6u);
  EXPECT_EQ(r.span_dim, 6u);
  EXPECT_TRUE(r.certified);
  EXPECT_EQ(r.witnesses.size(), 6u);
  EXPECT_TRUE(replay_witnesses(r, gens));
}

TEST(Saturate, EmptyGenerators) {
  const auto r = lie_saturate({}, 1, 1, 3);
  EXPECT_EQ(r.span_dim, 0u);
  EXPECT_FALSE(r.certified);
}

TEST(Saturate, PreconditionsAndMismatch) {
  const auto c2 = catalog::affine_space(2);
  const auto c1 = catalog::affine_space(1);
  const auto gens = all_generators(c2, 1);
  EXPECT_THROW(lie_saturate(gens, 2, 1, 2), PreconditionViolation);
  auto mixed = gens;
  mixed.push_back(all_generators(c1, 1).front());
  EXPECT_THROW(lie_saturate(mixed, 1, 2, 2), VarietyMismatch);
}

TEST(Saturate, WorkerCountDoesNotChangeReport) {
  const auto c2 = catalog::affine_space(2);
  const auto gens = all_generators(c2, 2);
  ::setenv("LND_LAB_THREADS", "1", 1);
  const auto one = lie_saturate(gens, 2, 3, 3);
  ::setenv("LND_LAB_THREADS", "4", 1);
  const auto four = lie_saturate(gens, 2, 3, 3);
  ::unsetenv("LND_LAB_THREADS");
  EXPECT_EQ(one.span_dim, four.span_dim);
  ASSERT_EQ(one.words.size(), four.words.size());
  for (std::size_t i = 0; i < one.words.size(); ++i) EXPECT_EQ(one.words[i].letters, four.words[i].letters);
}

TEST(DenslabProperty, SaturationMonotone) {
  const auto c2 = catalog::affine_space(2);
  const auto gens = all_generators(c2, 2);
  std::size_t prev = 0;
  for (int len = 1; len <= 3; ++len) {
    const auto r = lie_saturate(gens, 2, 3, len);
    ASSERT_GE(r.span_dim, prev);
    ASSERT_EQ(r.certified, r.span_dim == r.target_dim);
    prev = r.span_dim;
  }
  prev = 0;
  for (long work = 2; work <= 4; ++work) {
    const auto r = lie_saturate(gens, 2, work, 3);
    ASSERT_GE(r.span_dim, prev);
    prev = r.span_dim;
  }
  prev = 0;
  for (std::size_t k = 1; k <= gens.size(); k += 2) {
    const std::vector<fields::OvershearField> sub(gens.begin(), gens.begin() + static_cast<long>(k));
    const auto r = lie_saturate(sub, 2, 3, 2);
    ASSERT_GE(r.span_dim, prev);
    ASSERT_TRUE(replay_witnesses(r, sub));
    prev = r.span_dim;
  }
}

TEST(Compat, PlaneCoordinatePair) {
  const auto c2 = catalog::affine_space(2);
  const auto r = check_compatible_pair(c2.lnd("dx"), c2.lnd("dy"), {E(c2.variety, "1")}, 2);
  ASSERT_TRUE(r.h.has_value());
  EXPECT_EQ(*r.h, E(c2.variety, "x"));
  EXPECT_TRUE(r.h_nondegenerate);
  EXPECT_TRUE(r.containment_holds);
  EXPECT_TRUE(r.is_compatible_at_bound);
  EXPECT_EQ(r.containment_verified_to, 2);
}

TEST(Compat, DegeneratePair) {
  const auto c2 = catalog::affine_space(2);
  const auto r = check_compatible_pair(c2.lnd("dy"), c2.lnd("dy"), {E(c2.variety, "x")}, 2);
  EXPECT_FALSE(r.is_compatible_at_bound);
  EXPECT_FALSE(r.containment_holds);
  // the products only span polynomials in x; the span oracle confirms x*y is missing
  std::vector<RingElement> products;
  for (const auto* a : {"1", "x", "x^2"}) {
    for (const auto* b : {"1", "x", "x^2"}) products.push_back(E(c2.variety, a) * E(c2.variety, b));
  }
  EXPECT_FALSE(in_span(products, E(c2.variety, "x*y")));
}

TEST(Compat, DanielewskiPairFindsZ1) {
  const auto d = catalog::danielewski("z1^2 + z2^2 - 1", 2);
  const auto& theta = d.lnd("theta1_u");
  const auto& xi = d.lnd("theta2_v");
  const auto r = check_compatible_pair(theta, xi, {E(d.variety, "u*z1")}, 2);
  ASSERT_TRUE(r.h.has_value());
  EXPECT_EQ(*r.h, E(d.variety, "z1"));
  EXPECT_TRUE(theta.derivation().apply_power(*r.h, 2).is_zero());
  EXPECT_TRUE(xi.derivation().apply(*r.h).is_zero());
  EXPECT_EQ(theta.derivation().apply(*r.h), E(d.variety, "u"));
}

TEST(Compat, ZeroIdealGeneratorRejected) {
  const auto c2 = catalog::affine_space(2);
  EXPECT_THROW(check_compatible_pair(c2.lnd("dx"), c2.lnd("dy"), {E(c2.variety, "0")}, 2), PreconditionViolation);
}

TEST(DenslabProperty, CompatDownwardConsistency) {
  const auto c2 = catalog::affine_space(2);
  const auto c3 = catalog::affine_space(3);
  struct Case {
    const catalog::VarietyBundle* b;
    std::string theta, xi, ideal;
  };
  const std::vector<Case> cases{{&c2, "dx", "dy", "1"}, {&c2, "dy", "dx", "1"}, {&c3, "dx", "dy", "1"},
                                {&c3, "dz", "dx", "1"}};
  for (const auto& c : cases) {
    const long b = 3;
    const auto top = check_compatible_pair(c.b->lnd(c.theta), c.b->lnd(c.xi), {E(c.b->variety, c.ideal)}, b);
    if (!top.is_compatible_at_bound) continue;
    for (long lower = 1; lower < b; ++lower) {
      const auto r = check_compatible_pair(c.b->lnd(c.theta), c.b->lnd(c.xi), {E(c.b->variety, c.ideal)}, lower);
      EXPECT_TRUE(r.is_compatible_at_bound) << c.theta << "," << c.xi << " at " << lower;
    }
  }
}

TEST(Units, WorkedExamples) {
  const auto g = catalog::gl2();
  EXPECT_TRUE(verify_unit_witness(*g.variety, E(g.variety, "a*d - b*c"), E(g.variety, "w")));
  const auto c2 = catalog::affine_space(2);
  EXPECT_FALSE(verify_unit_witness(*c2.variety, E(c2.variety, "1"), E(c2.variety, "1")));
  const auto s = catalog::sl2();
  EXPECT_FALSE(verify_unit_witness(*s.variety, E(s.variety, "a*d - b*c"), E(s.variety, "1")));
  EXPECT_TRUE(E(s.variety, "a*d - b*c").is_constant());

  EXPECT_TRUE(lnd_annihilates_units(g.lnd("Ae12"), E(g.variety, "a*d - b*c"), E(g.variety, "w")));
  EXPECT_TRUE(lnd_annihilates_units(g.lnd("e21A"), E(g.variety, "a*d - b*c"), E(g.variety, "w")));
  EXPECT_TRUE(lnd_annihilates_units(c2.lnd("dy"), E(c2.variety, "1"), E(c2.variety, "1")));
  EXPECT_THROW(lnd_annihilates_units(c2.lnd("dy"), E(c2.variety, "x"), E(c2.variety, "1")), PreconditionViolation);
}

TEST(DenslabProperty, CatalogLndsAnnihilateUnits) {
  for (const auto& b : {catalog::gl2(), catalog::sl2(), catalog::affine_space(2)}) {
    for (const auto& u : b.units) {
      ASSERT_TRUE(verify_unit_witness(*b.variety, u.f, u.g));
      for (const auto& l : b.lnds) EXPECT_TRUE(lnd_annihilates_units(l.value, u.f, u.g)) << b.name << " " << l.name;
    }
  }
}
