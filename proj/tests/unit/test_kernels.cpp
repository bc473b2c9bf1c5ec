#include <gtest/gtest.h>

#include "jtk/error.hpp"
#include "jtk/jordan/ops.hpp"
#include "jtk/kernels/kernels.hpp"
#include "jtk/ktype/ktype.hpp"

using namespace jtk;

namespace {

const char* kDeltaTriples[] = {"matrix:2x2", "matrix:2x3", "sym:2", "sym:3", "asym:4", "spin:3", "spin:4"};

Vec frame_point(const JordanTriple& t, const std::vector<Rational>& q) {
  Vec z(t.dim());
  for (std::size_t j = 0; j < q.size(); ++j) z = vec_add(z, vec_scale(ExactScalar(q[j]), t.frame()[j]));
  return z;
}

}  // namespace

TEST(Delta, Matrix2x2ClosedForm) {
  auto t = JordanTriple::parse("matrix:2x2");
  auto delta = delta_kernel(t);
  Poly det = Poly::parse("z0*z3 - z1*z2", 4);
  SesquiPoly expected = SesquiPoly::constant(4, ExactScalar(1)) - SesquiPoly::pairing(t->metric()) +
                        SesquiPoly::outer(det, det);
  EXPECT_EQ(delta.kernel, expected);
}

TEST(Delta, DiagonalOnFrame) {
  auto t = JordanTriple::parse("matrix:2x2");
  Vec z = frame_point(*t, {Rational(1, 2), Rational(1, 3)});
  EXPECT_EQ(delta_kernel(t).kernel.eval(z, z), ExactScalar(Rational(2, 3)));

  Rng rng(8);
  for (const char* d : kDeltaTriples) {
    auto tt = JordanTriple::parse(d);
    auto delta = delta_kernel(tt);
    for (int k = 0; k < 5; ++k) {
      std::vector<Rational> q;
      for (unsigned j = 0; j < tt->rank(); ++j) q.push_back(rng.rational(3, 4));
      Vec zz = frame_point(*tt, q);
      EXPECT_EQ(delta.kernel.eval(zz, zz), ExactScalar(delta_on_frame(q))) << d;
    }
  }
}

TEST(Delta, BasicProperties) {
  Rng rng(21);
  for (const char* d : kDeltaTriples) {
    auto t = JordanTriple::parse(d);
    auto delta = delta_kernel(t);
    EXPECT_TRUE(delta.kernel.is_hermitian()) << d;
    EXPECT_EQ(delta.kernel.at_second(Vec(t->dim())), Poly::constant(t->dim(), ExactScalar(1))) << d;
    for (int k = 0; k < 4; ++k) {
      ExactMatrix g = random_k(*t, rng);
      Vec z = rng.vec(t->dim()), w = rng.vec(t->dim());
      EXPECT_EQ(delta.kernel.eval(g.apply(z), g.apply(w)), delta.kernel.eval(z, w)) << d;
    }
  }
}

TEST(Delta, Unsupported) {
  auto z = JordanTriple::parse("zero");
  EXPECT_THROW(delta_kernel(z), Unsupported);
}

TEST(Pochhammer, Examples) {
  EXPECT_EQ(pochhammer(Rational(2), Partition({1, 1}), 2), Rational(2));
  EXPECT_EQ(pochhammer(Rational(7, 3), Partition({1}), 2), Rational(7, 3));
  EXPECT_EQ(pochhammer(Rational(5), Partition(), 1), Rational(1));
  // (s)_(2,1) with a = 1: s(s+1)(s − 1/2).
  Rational s(3, 5);
  EXPECT_EQ(pochhammer(s, Partition({2, 1}), 1), s * (s + Rational(1)) * (s - Rational(1, 2)));
  EXPECT_EQ(rising(Rational(-2), 3), Rational(0));
}

TEST(Pochhammer, BoxRecurrence) {
  for (unsigned a : {1u, 2u, 4u})
    for (const Rational& s : {Rational(1, 2), Rational(2), Rational(-7, 3), Rational(11, 5)}) {
      auto tab = pochhammer_table(s, a, 3, 5);
      EXPECT_EQ(tab.entries.at(Partition()), Rational(1));
      for (const auto& [lam, v] : tab.entries) {
        if (lam.size() == 5 || v.is_zero()) continue;
        auto p = lam.padded(3);
        for (unsigned i = 0; i < 3; ++i) {
          if (i > 0 && p[i - 1] == p[i]) continue;
          auto up = p;
          ++up[i];
          Rational step = s - Rational(static_cast<std::int64_t>(i * a), 2) + Rational(static_cast<std::int64_t>(p[i]));
          EXPECT_EQ(tab.entries.at(Partition(up)), v * step);
        }
      }
    }
}

TEST(Series, ExpInvertsLog) {
  auto t = JordanTriple::parse("matrix:2x2");
  auto delta = delta_kernel(t);
  SesquiPoly u = delta.kernel - SesquiPoly::constant(4, ExactScalar(1));
  EXPECT_EQ(exp_series(log1p_series(u, 4), 4), delta.kernel.truncate(4));
  EXPECT_THROW(log1p_series(delta.kernel, 2), InvalidArgument);
}

TEST(Series, NegativeIntegerPowersArePolynomial) {
  for (const char* d : {"matrix:2x2", "spin:4", "sym:2"}) {
    auto t = JordanTriple::parse(d);
    auto delta = delta_kernel(t);
    EXPECT_EQ(delta_power_series(delta, Rational(-1), 4), delta.kernel) << d;
    SesquiPoly sq = SesquiPoly::mul_truncated(delta.kernel, delta.kernel, 4);
    EXPECT_EQ(delta_power_series(delta, Rational(-2), 4), sq) << d;
    EXPECT_EQ(delta_power_series(delta, Rational(0), 3), SesquiPoly::constant(t->dim(), ExactScalar(1)));
  }
}

TEST(Binomial, DegreeOne) {
  auto t = JordanTriple::parse("matrix:2x3");
  Rational s(5, 2);
  SesquiPoly series = delta_power_series(delta_kernel(t), s, 1);
  EXPECT_EQ(series.holomorphic_part(1), ExactScalar(s) * SesquiPoly::pairing(t->metric()));
  EXPECT_EQ(fock_kernel(*t, Partition({1})), SesquiPoly::pairing(t->metric()));
}

TEST(Binomial, AcceptanceCases) {
  struct Case {
    const char* triple;
    Rational s;
  };
  for (const auto& c : {Case{"matrix:2x2", Rational(1, 2)}, Case{"matrix:2x2", Rational(2)}, Case{"sym:2", Rational(2)},
                        Case{"spin:4", Rational(2)}}) {
    auto r = binomial_check(JordanTriple::parse(c.triple), c.s, 3);
    EXPECT_TRUE(r.ok) << c.triple << " s=" << c.s.str();
    EXPECT_EQ(r.rows.size(), 4u);
  }
}

TEST(Binomial, OtherParameters) {
  for (const char* d : {"matrix:2x3", "asym:4", "spin:3", "sym:3"})
    for (const Rational& s : {Rational(0), Rational(-1), Rational(1, 3), Rational(3)})
      EXPECT_TRUE(binomial_check(JordanTriple::parse(d), s, 2).ok) << d << " s=" << s.str();
  EXPECT_THROW(binomial_check(JordanTriple::parse("matrix:2x2"), Rational(1), 5), InvalidArgument);
}

TEST(Binomial, SZeroKeepsOnlyConstant) {
  auto r = binomial_check(JordanTriple::parse("matrix:2x2"), Rational(0), 3);
  EXPECT_TRUE(r.ok);
  for (const auto& [lam, c] : r.coefficients) EXPECT_EQ(c.is_zero(), lam.size() > 0);
}

TEST(Pieri, Matrix2x2) {
  auto t = JordanTriple::parse("matrix:2x2");
  auto r = pieri_check(t, Partition({1}));
  EXPECT_TRUE(r.ok);
  ASSERT_EQ(r.terms.size(), 2u);
  EXPECT_EQ(r.terms[0].nu, Partition({2}));
  EXPECT_EQ(r.terms[0].measured, ExactScalar(Rational(3, 2)));
  EXPECT_EQ(r.terms[1].nu, Partition({1, 1}));
  EXPECT_EQ(r.terms[1].measured, ExactScalar(Rational(1, 2)));
  ExactScalar total;
  for (const auto& term : r.terms) total += term.measured;
  EXPECT_EQ(total, ExactScalar(2));
  for (const auto& mu : {Partition({1, 1}), Partition({2}), Partition()})
    EXPECT_TRUE(pieri_check(t, mu).ok) << mu.str();
}

TEST(Pieri, OtherTubeTriples) {
  auto sym = pieri_check(JordanTriple::parse("sym:2"), Partition({1}));
  EXPECT_TRUE(sym.ok);
  ASSERT_EQ(sym.terms.size(), 2u);
  // a = 1: μ' = (1, −1/2), c_1 = (3/2 + 1/2)/(3/2), c_2 = (−3/2 + 1/2)/(−3/2).
  EXPECT_EQ(sym.terms[0].expected, Rational(4, 3));
  EXPECT_EQ(sym.terms[1].expected, Rational(2, 3));
  for (const char* d : {"spin:4", "spin:3", "sym:3"})
    for (const auto& mu : {Partition({1}), Partition({2, 1})})
      EXPECT_TRUE(pieri_check(JordanTriple::parse(d), mu).ok) << d << " " << mu.str();
  EXPECT_THROW(pieri_check(JordanTriple::parse("matrix:2x3"), Partition({1})), InvalidArgument);
}

TEST(Pieri, CoefficientsSumToRank) {
  for (unsigned a : {1u, 2u, 4u})
    for (const auto& mu : {std::vector<unsigned>{0, 0, 0}, {2, 1, 0}, {3, 3, 1}, {4, 2, 2}}) {
      Rational sum(0);
      for (unsigned i = 0; i < 3; ++i)
        if (i == 0 || mu[i - 1] > mu[i]) {
          Rational c = pieri_coefficient(mu, i, a);
          EXPECT_GT(c, Rational(0));
          sum += c;
        }
      EXPECT_EQ(sum, Rational(3));
    }
}

TEST(Wallach, Examples) {
  auto m23 = wallach_report(*JordanTriple::parse("matrix:2x3"));
  EXPECT_EQ(m23.continuous_bound, Rational(1));
  EXPECT_EQ(m23.bergman, Rational(5));
  ASSERT_EQ(m23.hardy.size(), 2u);
  EXPECT_EQ(m23.hardy.back().first, 2u);
  EXPECT_EQ(m23.hardy.back().second, Rational(3));
  EXPECT_EQ(m23.hardy.front().second, Rational(4));

  auto m22 = wallach_report(*JordanTriple::parse("matrix:2x2"));
  EXPECT_EQ(m22.discrete, (std::vector<Rational>{Rational(0), Rational(1)}));

  auto spin = wallach_report(*JordanTriple::parse("spin:4"));
  EXPECT_EQ(spin.bergman, Rational(4));
  EXPECT_EQ(spin.weighted_bergman_bound, Rational(3));
}
