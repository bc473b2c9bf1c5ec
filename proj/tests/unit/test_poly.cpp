#include <gtest/gtest.h>

#include "jtk/error.hpp"
#include "jtk/poly/fock.hpp"
#include "jtk/poly/poly.hpp"
#include "jtk/poly/sesqui.hpp"
#include "support.hpp"

using namespace jtk;
using jtk::testing::S;

namespace {

Poly z(std::size_t n, unsigned i) { return Poly::variable(n, i); }

// z = [[z0, z1], [z2, z3]]
Poly det22() { return z(4, 0) * z(4, 3) - z(4, 1) * z(4, 2); }

ExactMatrix diag(std::initializer_list<int> d) {
  ExactMatrix m(d.size(), d.size());
  std::size_t i = 0;
  for (int x : d) {
    m(i, i) = ExactScalar(x);
    ++i;
  }
  return m;
}

// (. | w) as a polynomial in z.
Poly pairing_form(const ExactMatrix& g, const Vec& w) {
  Vec coeffs(g.rows());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) coeffs[i] += g(i, j) * w[j].conj();
  return Poly::linear(coeffs);
}

}  // namespace

TEST(Monomial, PackingAndEnumeration) {
  Monomial m = mono::from_exponents(std::vector<unsigned>{2, 0, 1});
  EXPECT_EQ(mono::degree(m), 3u);
  EXPECT_EQ(mono::exp(m, 0), 2u);
  EXPECT_EQ(mono::exp(m, 2), 1u);
  EXPECT_EQ(mono::of_degree(3, 2).size(), 6u);
  EXPECT_EQ(mono::of_degree(6, 4).size(), 126u);
  EXPECT_THROW(mono::mul(mono::var(1, 20), mono::var(1, 12)), InvalidArgument);
  MonomialIndex idx(3, 0, 2);
  EXPECT_EQ(idx.size(), 10u);
  EXPECT_EQ(mono::degree(idx.at(0)), 2u);
  EXPECT_EQ(idx.at(idx.size() - 1), 0u);
  EXPECT_EQ(idx.find(mono::var(5)), -1);
}

TEST(Poly, SquareOfSum) {
  Poly s = z(2, 0) + z(2, 1);
  EXPECT_EQ(s.pow(2), Poly::parse("z0^2 + 2*z0*z1 + z1^2", 2));
}

TEST(Poly, EvalDeterminantAtIdentity) {
  Vec e{S("1"), S("0"), S("0"), S("1")};
  EXPECT_EQ(det22().eval(e), S("1"));
}

TEST(Poly, TimesZeroIsZero) { EXPECT_TRUE((det22() * Poly(4)).is_zero()); }

TEST(Poly, NvarsMismatch) { EXPECT_THROW(z(2, 0) + z(3, 0), DimensionMismatch); }

TEST(Poly, ComposeLinearExamples) {
  EXPECT_EQ(z(3, 0).compose_linear(ExactScalar(2) * ExactMatrix::identity(3)), ExactScalar(2) * z(3, 0));
  ExactMatrix transpose(4, 4);
  transpose(0, 0) = transpose(1, 2) = transpose(2, 1) = transpose(3, 3) = ExactScalar(1);
  EXPECT_EQ(det22().compose_linear(transpose), det22());
  std::mt19937_64 rng(1);
  Poly p = jtk::testing::random_poly(rng, 4, 3, 8);
  EXPECT_EQ(p.compose_linear(ExactMatrix::identity(4)), p);
  EXPECT_THROW(p.compose_linear(ExactMatrix::identity(3)), DimensionMismatch);
}

TEST(Poly, ComposeLinearMatchesEvaluation) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 20; ++t) {
    Poly p = jtk::testing::random_poly(rng, 3, 3, 6);
    ExactMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = jtk::testing::random_scalar(rng);
    Vec x = jtk::testing::random_vec(rng, 3);
    ASSERT_EQ(p.compose_linear(m).eval(x), p.eval(m.apply(x)));
  }
}

TEST(Poly, DeriveExamples) {
  std::mt19937_64 rng(3);
  Poly h = jtk::testing::random_homogeneous(rng, 4, 3, 7);
  EXPECT_EQ(h.derive(ExactMatrix::identity(4)), ExactScalar(3) * h);
  // A z = E11 z + z E11 on 2x2 matrices.
  ExactMatrix a(4, 4);
  a(0, 0) = ExactScalar(2);
  a(1, 1) = ExactScalar(1);
  a(2, 2) = ExactScalar(1);
  EXPECT_EQ(z(4, 0).derive(a), ExactScalar(2) * z(4, 0));
}

TEST(Poly, DeriveIsDerivationWithReversedBracket) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 15; ++t) {
    Poly p = jtk::testing::random_poly(rng, 3, 3, 5);
    Poly q = jtk::testing::random_poly(rng, 3, 2, 4);
    ExactMatrix a(3, 3), b(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        a(i, j) = jtk::testing::random_scalar(rng);
        b(i, j) = jtk::testing::random_scalar(rng);
      }
    ASSERT_EQ((p * q).derive(a), p.derive(a) * q + p * q.derive(a));
    // A^δ B^δ - B^δ A^δ = (BA - AB)^δ for A^δ f = f'(z) A z.
    Poly lhs = p.derive(b).derive(a) - p.derive(a).derive(b);
    ASSERT_EQ(lhs, p.derive(b * a - a * b));
  }
}

TEST(Poly, NormalProjectExamples) {
  // matrix 2x3, z = [[z0 z1 z2], [z3 z4 z5]], c = E11, W = span{E22, E23}.
  Poly m12 = z(6, 0) * z(6, 4) - z(6, 1) * z(6, 3);
  Vec c = unit_vector(6, 0);
  std::vector<Vec> w{unit_vector(6, 4), unit_vector(6, 5)};
  EXPECT_EQ(normal_project(m12, c, w), z(2, 0));
  EXPECT_EQ(normal_project(Poly::constant(6, S("1")), c, w), Poly::constant(2, S("1")));
  std::vector<Vec> all;
  for (unsigned i = 0; i < 6; ++i) all.push_back(unit_vector(6, i));
  EXPECT_EQ(normal_project(m12, Vec(6), all), m12);
}

TEST(Poly, NormalProjectIsHomomorphism) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 15; ++t) {
    Poly f = jtk::testing::random_poly(rng, 4, 3, 5);
    Poly g = jtk::testing::random_poly(rng, 4, 2, 5);
    Vec c = jtk::testing::random_vec(rng, 4);
    std::vector<Vec> w{jtk::testing::random_vec(rng, 4), jtk::testing::random_vec(rng, 4)};
    ASSERT_EQ(normal_project(f * g, c, w), normal_project(f, c, w) * normal_project(g, c, w));
  }
}

TEST(Poly, TextRoundTripAndErrors) {
  Poly p = Poly::parse("(3/2+1/2i)*z0^2*z3 - z1 + 7", 4);
  EXPECT_EQ(p.coeff(mono::var(0, 2) + mono::var(3)), S("3/2+1/2*i"));
  EXPECT_EQ(Poly::parse(p.str(), 4), p);
  EXPECT_EQ(p.str(), "(3/2+1/2*i)*z0^2*z3 - z1 + 7");
  try {
    Poly::parse("z0 + z9", 4);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
  EXPECT_THROW(Poly::parse("z0 +", 4), ParseError);
  EXPECT_THROW(Poly::parse("(1/0)*z0", 4), Error);
}

TEST(Poly, DegreeAdditivity) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 30; ++t) {
    Poly p = jtk::testing::random_poly(rng, 3, 3, 4);
    Poly q = jtk::testing::random_poly(rng, 3, 3, 4);
    if (p.is_zero() || q.is_zero()) continue;
    ASSERT_EQ((p * q).degree(), p.degree() + q.degree());
  }
}

TEST(PolySubspace, SpanAndMembership) {
  auto idx = MonomialIndex::get(4, 2, 2);
  PolySubspace s = PolySubspace::span({det22(), z(4, 0) * z(4, 3)}, idx);
  EXPECT_EQ(s.dim(), 2u);
  EXPECT_TRUE(s.contains(z(4, 1) * z(4, 2)));
  EXPECT_FALSE(s.contains(z(4, 0) * z(4, 0)));
  EXPECT_FALSE(s.contains(z(4, 0)));
}

TEST(Fock, MonomialNorms) {
  FockSpace identity(ExactMatrix::identity(4));
  EXPECT_EQ(identity.inner(z(4, 0), z(4, 0)), S("1"));
  EXPECT_EQ(identity.inner(z(4, 0).pow(2), z(4, 0).pow(2)), S("2"));
  EXPECT_EQ(identity.inner(z(4, 0), z(4, 1)), S("0"));
  FockSpace spin(diag({2, 2, 2, 2}));
  EXPECT_EQ(spin.inner(z(4, 0), z(4, 0)), S("1/2"));
}

TEST(Fock, GeneralMetricMatchesDualOnLinearForms) {
  ExactMatrix g = ExactMatrix::from_rows({{S("2"), S("i")}, {S("-i"), S("2")}}, 2);
  FockSpace f(g);
  ExactMatrix ginv = g.inverse();
  for (unsigned i = 0; i < 2; ++i)
    for (unsigned j = 0; j < 2; ++j) EXPECT_EQ(f.inner(z(2, i), z(2, j)), ginv(i, j));
}

class FockProperties : public ::testing::TestWithParam<int> {};

TEST_P(FockProperties, HermitianReproducingInvariant) {
  std::mt19937_64 rng(7 + static_cast<unsigned>(GetParam()));
  ExactMatrix g;
  switch (GetParam()) {
    case 0: g = ExactMatrix::identity(3); break;
    case 1: g = diag({1, 2, 2}); break;
    default: g = ExactMatrix::from_rows({{S("2"), S("1+i"), S("0")}, {S("1-i"), S("3"), S("0")}, {S("0"), S("0"), S("1")}}, 3);
  }
  FockSpace f(g);
  for (int t = 0; t < 10; ++t) {
    Poly p = jtk::testing::random_poly(rng, 3, 3, 5);
    Poly q = jtk::testing::random_poly(rng, 3, 3, 5);
    ASSERT_EQ(f.inner(p, q), f.inner(q, p).conj());
    ASSERT_EQ(f.inner(p, p).im(), Rational(0));
    if (!p.is_zero()) ASSERT_GT(f.inner(p, p).re(), Rational(0));
    for (unsigned n = 0; n <= 3; ++n) {
      Poly h = jtk::testing::random_homogeneous(rng, 3, n, 4);
      Vec w = jtk::testing::random_vec(rng, 3);
      ExactScalar nfact(1);
      for (unsigned k = 2; k <= n; ++k) nfact *= ExactScalar(static_cast<int>(k));
      ASSERT_EQ(f.inner(pairing_form(g, w).pow(n), h), nfact * h.eval(w));
    }
  }
  if (GetParam() == 0) {
    // Rational rotation in the (0,1) plane preserves the identity metric.
    ExactMatrix k = ExactMatrix::identity(3);
    k(0, 0) = S("3/5");
    k(0, 1) = S("-4/5");
    k(1, 0) = S("4/5");
    k(1, 1) = S("3/5");
    for (int t = 0; t < 10; ++t) {
      Poly p = jtk::testing::random_poly(rng, 3, 3, 5);
      Poly q = jtk::testing::random_poly(rng, 3, 3, 5);
      ASSERT_EQ(f.inner(p.compose_linear(k), q.compose_linear(k)), f.inner(p, q));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Metrics, FockProperties, ::testing::Values(0, 1, 2));

TEST(Sesqui, OuterAndHermitian) {
  Poly p = Poly::parse("z0 + (1/2+i)*z1", 2);
  SesquiPoly k = SesquiPoly::outer(p, p);
  EXPECT_TRUE(k.is_hermitian());
  Vec a{S("1"), S("2i")}, b{S("1/3"), S("-1")};
  EXPECT_EQ(k.eval(a, b), p.eval(a) * p.eval(b).conj());
  SesquiPoly skew = SesquiPoly::outer(z(2, 0), z(2, 1));
  EXPECT_FALSE(skew.is_hermitian());
}
