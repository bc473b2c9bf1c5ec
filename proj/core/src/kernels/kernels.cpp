#include "jtk/kernels/kernels.hpp"

#include <algorithm>
#include <numeric>

#include "jtk/error.hpp"
#include "jtk/jordan/ops.hpp"
#include "jtk/ktype/ktype.hpp"

namespace jtk {

namespace {

using SesquiMatrix = std::vector<std::vector<SesquiPoly>>;

constexpr unsigned kNoTruncation = 1000;

SesquiPoly sesqui_det(const SesquiMatrix& m, std::size_t nvars) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  SesquiPoly det(nvars);
  do {
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    SesquiPoly term = SesquiPoly::constant(nvars, ExactScalar(sign));
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i)
      term = SesquiPoly::mul_truncated(term, m[i][perm[i]], kNoTruncation);
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// det(I − Z W*) with Z = Σ z_a B_a, W = Σ w_b B_b in the matrix realization.
SesquiPoly matrix_delta(const JordanTriple& t) {
  const std::size_t d = t.dim();
  std::vector<ExactMatrix> mats;
  for (std::size_t a = 0; a < d; ++a) {
    Vec e(d);
    e[a] = ExactScalar(1);
    mats.push_back(t.to_matrix(e));
  }
  const std::size_t rows = mats.front().rows(), cols = mats.front().cols();
  SesquiMatrix m(rows, std::vector<SesquiPoly>(rows, SesquiPoly(d)));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < rows; ++j) {
      if (i == j) m[i][j] = SesquiPoly::constant(d, ExactScalar(1));
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
          ExactScalar c;
          for (std::size_t k = 0; k < cols; ++k) c += mats[a](i, k) * mats[b](j, k).conj();
          if (!c.is_zero()) m[i][j].add_term(mono::var(static_cast<unsigned>(a)), mono::var(static_cast<unsigned>(b)), -c);
        }
    }
  return sesqui_det(m, d);
}

// (1 + u)^{1/2} up to holomorphic degree n.
SesquiPoly sqrt1p_series(const SesquiPoly& u, unsigned n) {
  SesquiPoly out = SesquiPoly::constant(u.nvars(), ExactScalar(1));
  SesquiPoly power = out;
  Rational coef(1);
  for (unsigned k = 1; k <= n; ++k) {
    coef = coef * (Rational(1, 2) - Rational(static_cast<std::int64_t>(k) - 1)) / Rational(static_cast<std::int64_t>(k));
    power = SesquiPoly::mul_truncated(power, u, n);
    out += ExactScalar(coef) * power;
  }
  return out;
}

}  // namespace

DeltaKernel delta_kernel(const TriplePtr& t) {
  const std::size_t d = t->dim();
  SesquiPoly one = SesquiPoly::constant(d, ExactScalar(1));
  switch (t->family()) {
    case Family::matrix:
    case Family::symmetric:
      return {t, matrix_delta(*t)};
    case Family::antisymmetric: {
      SesquiPoly full = matrix_delta(*t);
      SesquiPoly root = sqrt1p_series(full - one, t->rank());
      if (SesquiPoly::mul_truncated(root, root, kNoTruncation) != full)
        throw InvariantViolation("delta_kernel: det(I - z w*) is not a square on " + t->descriptor());
      return {t, root};
    }
    case Family::spin: {
      const Poly& n2 = t->minor_poly(2);
      return {t, one - SesquiPoly::pairing(t->metric()) + SesquiPoly::outer(n2, n2)};
    }
    default:
      throw Unsupported("delta_kernel: unsupported family " + family_name(t->family()));
  }
}

Rational delta_on_frame(std::span<const Rational> q) {
  Rational out(1);
  for (const auto& x : q) out *= Rational(1) - x * x;
  return out;
}

Rational rising(const Rational& x, unsigned m) {
  Rational out(1);
  for (unsigned k = 0; k < m; ++k) out *= x + Rational(static_cast<std::int64_t>(k));
  return out;
}

Rational pochhammer(const Rational& s, const Partition& lambda, unsigned a) {
  Rational out(1);
  for (unsigned j = 0; j < lambda.length(); ++j)
    out *= rising(s - Rational(static_cast<std::int64_t>(j) * a, 2), lambda[j]);
  return out;
}

PochhammerTable pochhammer_table(const Rational& s, unsigned a, unsigned rank, unsigned n) {
  PochhammerTable tab{s, a, {}};
  for (unsigned m = 0; m <= n; ++m)
    for (const auto& lam : partitions_of(m, rank)) tab.entries.emplace(lam, pochhammer(s, lam, a));
  return tab;
}

SesquiPoly log1p_series(const SesquiPoly& u, unsigned n) {
  if (!u.coeff(0, 0).is_zero()) throw InvalidArgument("log1p_series: argument has a constant term");
  SesquiPoly out(u.nvars()), power = SesquiPoly::constant(u.nvars(), ExactScalar(1));
  for (unsigned k = 1; k <= n; ++k) {
    power = SesquiPoly::mul_truncated(power, u, n);
    Rational c(k % 2 == 1 ? 1 : -1, static_cast<std::int64_t>(k));
    out += ExactScalar(c) * power;
  }
  return out;
}

SesquiPoly exp_series(const SesquiPoly& v, unsigned n) {
  if (!v.coeff(0, 0).is_zero()) throw InvalidArgument("exp_series: argument has a constant term");
  SesquiPoly out = SesquiPoly::constant(v.nvars(), ExactScalar(1)), power = out;
  Rational fact(1);
  for (unsigned k = 1; k <= n; ++k) {
    power = SesquiPoly::mul_truncated(power, v, n);
    fact *= Rational(static_cast<std::int64_t>(k));
    out += ExactScalar(Rational(1) / fact) * power;
  }
  return out;
}

SesquiPoly delta_power_series(const DeltaKernel& delta, const Rational& s, unsigned n) {
  SesquiPoly u = delta.kernel - SesquiPoly::constant(delta.kernel.nvars(), ExactScalar(1));
  return exp_series(ExactScalar(-s) * log1p_series(u.truncate(n), n), n);
}

BinomialResult binomial_check(const TriplePtr& t, const Rational& s, unsigned n) {
  if (n > 4) throw InvalidArgument("binomial_check: degree bound is at most 4");
  BinomialResult res;
  res.s = s;
  res.degree = n;
  SesquiPoly lhs = delta_power_series(delta_kernel(t), s, n);
  for (unsigned m = 0; m <= n; ++m) {
    SesquiPoly rhs(t->dim());
    for (const auto& lam : partitions_of(m, t->rank())) {
      Rational c = pochhammer(s, lam, t->a());
      res.coefficients.emplace_back(lam, c);
      if (!c.is_zero()) rhs += ExactScalar(c) * fock_kernel(*t, lam);
    }
    bool eq = lhs.holomorphic_part(m) == rhs;
    res.rows.push_back({m, eq});
    res.ok = res.ok && eq;
  }
  return res;
}

Rational pieri_coefficient(const std::vector<unsigned>& mu, unsigned i, unsigned a) {
  auto shifted = [&](std::size_t k) {
    return Rational(static_cast<std::int64_t>(mu[k])) - Rational(static_cast<std::int64_t>(a * k), 2);
  };
  Rational out(1);
  for (std::size_t j = 0; j < mu.size(); ++j) {
    if (j == i) continue;
    Rational diff = shifted(i) - shifted(j);
    out *= (diff + Rational(a, 2)) / diff;
  }
  return out;
}

PieriResult pieri_check(const TriplePtr& t, const Partition& mu) {
  if (!t->is_tube()) throw InvalidArgument("pieri_check: " + t->descriptor() + " is not of tube type");
  if (mu.length() > t->rank()) throw InvalidArgument("pieri_check: partition longer than rank");
  const unsigned r = t->rank();
  PieriResult res;
  res.mu = mu;
  Vec e = t->frame_sum(r);
  Vec pair(t->dim());
  for (std::size_t i = 0; i < t->dim(); ++i)
    for (std::size_t j = 0; j < t->dim(); ++j) pair[i] += t->metric()(i, j) * e[j].conj();
  Poly p = Poly::linear(pair) * spherical(*t, mu);
  auto padded = mu.padded(r);
  Poly sum(t->dim());
  for (unsigned i = 0; i < r; ++i) {
    if (i > 0 && padded[i - 1] == padded[i]) continue;
    std::vector<unsigned> up = padded;
    ++up[i];
    Partition nu(up);
    Poly proj = ktype_project(*t, p, nu);
    Poly phi = spherical(*t, nu);
    PieriTerm term{nu, pieri_coefficient(padded, i, t->a()), proj.eval(e), false, false, false};
    term.proportional = proj == term.measured * phi;
    term.equal = term.measured == ExactScalar(term.expected);
    term.positive = term.expected > Rational(0);
    res.ok = res.ok && term.proportional && term.equal && term.positive;
    sum += term.measured * phi;
    res.terms.push_back(std::move(term));
  }
  res.exhaustive = sum == p;
  res.ok = res.ok && res.exhaustive;
  return res;
}

WallachReport wallach_report(const JordanTriple& t) {
  WallachReport w;
  w.a = t.a();
  w.b = t.b();
  w.r = t.rank();
  w.d = t.dim();
  const auto a = static_cast<std::int64_t>(w.a), b = static_cast<std::int64_t>(w.b), r = static_cast<std::int64_t>(w.r);
  const auto rm1 = r > 0 ? r - 1 : 0;
  w.continuous_bound = Rational(a * rm1, 2);
  for (std::int64_t l = 0; l < r; ++l) w.discrete.emplace_back(l * a, 2);
  w.weighted_bergman_bound = Rational(1 + a * rm1 + b);
  w.bergman = Rational(2 + a * rm1 + b);
  if (r > 0)
    for (std::int64_t l = 1; l <= r; ++l)
      w.hardy.emplace_back(static_cast<unsigned>(l),
                           Rational(static_cast<std::int64_t>(w.d), r) + Rational((r - l) * a, 2));
  return w;
}

}  // namespace jtk
