#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "jtk/error.hpp"
#include "jtk/exact/matrix.hpp"
#include "jtk/exact/subspace.hpp"

using namespace jtk;

namespace {

ExactScalar S(std::string_view s) { return ExactScalar::parse(s); }

ExactScalar random_scalar(std::mt19937_64& rng, bool complex = true) {
  auto small = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1)); };
  Rational re(small(-4, 4), small(1, 3));
  Rational im = complex && rng() % 2 ? Rational(small(-3, 3), small(1, 2)) : Rational(0);
  return {re, im};
}

ExactMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int zero_bias) {
  ExactMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (static_cast<int>(rng() % 10) >= zero_bias) m(i, j) = random_scalar(rng);
  return m;
}

}  // namespace

TEST(Rational, ReducesAndCompares) {
  EXPECT_EQ(Rational(6, -4).str(), "-3/2");
  EXPECT_EQ(Rational(0, 5).str(), "0");
  EXPECT_TRUE(Rational(1, 3) < Rational(1, 2));
  EXPECT_THROW(Rational(1, 0), DivisionByZero);
}

TEST(Rational, PromotesAndDemotes) {
  Rational big(INT64_MAX);
  Rational sq = big * big;
  EXPECT_FALSE(sq.is_small());
  Rational back = sq / big;
  EXPECT_TRUE(back.is_small());
  EXPECT_EQ(back, big);
  Rational m(INT64_MIN);
  EXPECT_EQ((-m).str(), "9223372036854775808");
  EXPECT_EQ(m + Rational(1), Rational(INT64_MIN + 1));
}

TEST(Rational, AgreesWithGmpOnRandomChains) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Rational x(1);
    mpq_class q(1);
    for (int k = 0; k < 30; ++k) {
      auto n = static_cast<std::int64_t>(rng() % 2000000007ULL) - 1000000003;
      auto d = static_cast<std::int64_t>(rng() % 999983ULL) + 1;
      Rational y(n, d);
      mpq_class qy(n, d);
      qy.canonicalize();
      switch (rng() % 4) {
        case 0: x += y; q += qy; break;
        case 1: x -= y; q -= qy; break;
        case 2: x *= y; q *= qy; break;
        default:
          if (!y.is_zero()) {
            x /= y;
            q /= qy;
          }
      }
      ASSERT_EQ(x.to_mpq(), q);
      ASSERT_EQ(x, Rational(q));
    }
  }
}

TEST(ExactScalar, ProductWithConjugate) { EXPECT_EQ(S("1/2+i") * S("1/2-i"), S("5/4")); }

TEST(ExactScalar, Conjugate) { EXPECT_EQ(S("3/5+4/5*i").conj(), S("3/5-4/5*i")); }

TEST(ExactScalar, QuotientOfConjugates) { EXPECT_EQ(S("1+i") / S("1-i"), ExactScalar::i()); }

TEST(ExactScalar, DivisionByZero) {
  EXPECT_THROW(S("1") / ExactScalar(), DivisionByZero);
  EXPECT_FALSE(try_div(S("1"), ExactScalar()).has_value());
  EXPECT_EQ(*try_div(S("2"), S("4")), S("1/2"));
}

TEST(ExactScalar, TextRoundTrip) {
  for (auto t : {"0", "3/2", "i", "-i", "1/2+3/4*i", "-2*i", "-7/3-i"}) EXPECT_EQ(S(t).str(), t);
  EXPECT_EQ(S("2i"), S("2*i"));
  EXPECT_EQ(S(" 1/2i "), S("1/2*i"));
  try {
    S("1/2+x");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(ExactScalar, FieldAxiomsOnRandomValues) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    ExactScalar x = random_scalar(rng), y = random_scalar(rng), z = random_scalar(rng);
    ASSERT_EQ(x + y, y + x);
    ASSERT_EQ((x * y) * z, x * (y * z));
    ASSERT_EQ(x * (y + z), x * y + x * z);
    ASSERT_EQ(x.conj().conj(), x);
    ASSERT_TRUE((x * x.conj()).is_real());
    ASSERT_EQ(ExactScalar(x.norm2()), x * x.conj());
    if (!y.is_zero()) ASSERT_EQ((x / y) * y, x);
  }
}

TEST(ExactMatrix, InverseDeterminantSolve) {
  ExactMatrix a = ExactMatrix::from_rows({{S("2"), S("1")}, {S("i"), S("3")}}, 2);
  EXPECT_EQ(a.determinant(), S("6-i"));
  EXPECT_EQ(a * a.inverse(), ExactMatrix::identity(2));
  Vec b{S("1"), S("0")};
  auto x = a.solve(b);
  ASSERT_TRUE(x);
  EXPECT_EQ(a.apply(*x), b);
  ExactMatrix sing = ExactMatrix::from_rows({{S("1"), S("2")}, {S("2"), S("4")}}, 2);
  EXPECT_THROW(sing.inverse(), InvalidArgument);
  EXPECT_FALSE(sing.solve(Vec{S("1"), S("0")}).has_value());
}

TEST(ExactMatrix, RankPlusNullityEqualsColumns) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 60; ++t) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
    ExactMatrix a = random_matrix(rng, r, c, static_cast<int>(rng() % 8));
    if (t % 3 == 0 && r > 1) {
      for (std::size_t j = 0; j < c; ++j) a(r - 1, j) = a(0, j) * S("2-i");
    }
    auto ns = a.nullspace();
    ASSERT_EQ(a.rank() + ns.size(), c);
    for (const auto& v : ns) ASSERT_TRUE(vec_is_zero(a.apply(v)));
  }
}

TEST(ExactMatrix, RankIsPivotOrderIndependent) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 40; ++t) {
    std::size_t r = 2 + rng() % 4, c = 2 + rng() % 4;
    ExactMatrix a = random_matrix(rng, r, c, 5);
    std::vector<std::size_t> perm(c);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::size_t rk = a.rank();
    ASSERT_EQ(rk, a.permute_columns(perm).rank());
    std::vector<std::size_t> piv;
    a.rref(&piv);
    ASSERT_EQ(rk, piv.size());
  }
}

TEST(Subspace, SpanExamples) {
  EXPECT_EQ(Subspace::span({{S("1"), S("0")}, {S("0"), S("1")}}, 2).dim(), 2u);
  EXPECT_EQ(Subspace::span({{S("1"), S("1")}, {S("2"), S("2")}}, 2).dim(), 1u);
  EXPECT_EQ(Subspace::span(std::vector<Vec>{}, 2).dim(), 0u);
  EXPECT_THROW(Subspace::span({{S("1")}}, 2), DimensionMismatch);
}

TEST(Subspace, IntersectPlanes) {
  Subspace xy = Subspace::span({unit_vector(3, 0), unit_vector(3, 1)}, 3);
  Subspace yz = Subspace::span({unit_vector(3, 1), unit_vector(3, 2)}, 3);
  Subspace y = Subspace::intersect(xy, yz);
  EXPECT_EQ(y, Subspace::span({unit_vector(3, 1)}, 3));
}

TEST(Subspace, QuotientAndSum) {
  Subspace full = Subspace::full(4);
  Subspace hyper = Subspace::span({{S("1"), S("-1"), S("0"), S("0")}, unit_vector(4, 2), unit_vector(4, 3)}, 4);
  EXPECT_EQ(Subspace::quotient_dim(full, hyper), 1u);
  Subspace a = Subspace::span({{S("1"), S("i"), S("0"), S("0")}}, 4);
  Subspace b = Subspace::span({unit_vector(4, 3)}, 4);
  EXPECT_EQ(Subspace::sum(a, b).dim(), 2u);
  EXPECT_THROW(Subspace::sum(a, Subspace(3)), DimensionMismatch);
}

TEST(Subspace, CanonicalFormAndIdempotence) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 2 + rng() % 6, k = rng() % 6;
    std::vector<Vec> vs;
    for (std::size_t i = 0; i < k; ++i) vs.push_back(random_matrix(rng, 1, n, 4).row(0));
    Subspace s = Subspace::span(vs, n);
    std::vector<Vec> rev(vs.rbegin(), vs.rend());
    ASSERT_EQ(s, Subspace::span(rev, n));
    ASSERT_EQ(s, Subspace::span(s.basis(), n));
    ExactMatrix r = ExactMatrix::from_rows(vs, n);
    ASSERT_EQ(s.dim(), vs.empty() ? 0 : r.rank());
    const auto& piv = s.pivots();
    for (std::size_t i = 0; i < s.dim(); ++i) {
      ASSERT_EQ(s.basis()[i].front().first, piv[i]);
      ASSERT_TRUE(s.basis()[i].front().second.is_one());
      if (i) ASSERT_LT(piv[i - 1], piv[i]);
    }
    if (!vs.empty()) {
      ExactMatrix rr = r.rref();
      ExactMatrix top(s.dim(), n);
      for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) top(i, j) = rr(i, j);
      ASSERT_EQ(top, s.basis_matrix());
    }
  }
}

TEST(Subspace, DimensionFormula) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 2 + rng() % 6;
    auto make = [&]() {
      std::vector<Vec> vs;
      std::size_t k = rng() % (n + 1);
      for (std::size_t i = 0; i < k; ++i) vs.push_back(random_matrix(rng, 1, n, 5).row(0));
      return Subspace::span(vs, n);
    };
    Subspace a = make(), b = make();
    Subspace s = Subspace::sum(a, b), i = Subspace::intersect(a, b);
    ASSERT_EQ(a.dim() + b.dim(), s.dim() + i.dim());
    ASSERT_TRUE(a.contains(i));
    ASSERT_TRUE(b.contains(i));
    ASSERT_TRUE(s.contains(a));
    ASSERT_EQ(Subspace::quotient_dim(a, b), a.dim() - i.dim());
  }
}
