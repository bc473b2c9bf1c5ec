#include "jtk/jordan/ops.hpp"

#include <memory>
#include <mutex>
#include <string>

#include "jtk/error.hpp"

namespace jtk {
namespace {

void check_len(const JordanTriple& t, CVec v, const char* what) {
  if (v.size() != t.dim())
    throw DimensionMismatch(std::string(what) + ": expected vector of length " + std::to_string(t.dim()) + ", got " +
                            std::to_string(v.size()));
}

std::vector<std::size_t> support(CVec v) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.push_back(i);
  return s;
}

std::vector<Vec> columns(const ExactMatrix& m) {
  std::vector<Vec> out;
  for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.column(j));
  return out;
}

std::vector<Vec> dense_basis(const Subspace& s) {
  std::vector<Vec> out;
  for (const auto& r : s.basis()) out.push_back(to_dense(r, s.ambient_dim()));
  return out;
}

struct Projections {
  ExactMatrix P2, P1, P0;
};

Projections projections(const JordanTriple& t, CVec c) {
  const std::size_t d = t.dim();
  if (!is_tripotent(t, c)) throw InvalidArgument("peirce: " + vec_str(c) + " is not a tripotent");
  ExactMatrix D = box(t, c, c);
  ExactMatrix I = ExactMatrix::identity(d);
  ExactMatrix DmI = D - I;
  ExactMatrix Dm2I = DmI - I;
  if (!(D * DmI * Dm2I).is_zero()) throw InvariantViolation("peirce: D(D-I)(D-2I) != 0");
  ExactScalar half(Rational(1, 2));
  return {half * (D * DmI), D * (ExactScalar(-1) * Dm2I), half * (DmI * Dm2I)};
}

Vec inverse_with(const JordanTriple& t, const ExactMatrix& P2, CVec c, CVec u) {
  if (!vec_is_zero(vec_sub(P2.apply(u), u))) throw InvalidArgument("inverse: element does not lie in the Peirce 2-space");
  Subspace U = Subspace::span(columns(P2), t.dim());
  ExactMatrix B = U.basis_matrix().transpose();  // d × dim U
  ExactMatrix M = quadratic_rep(t, u, c) * B;
  if (M.rank() != U.dim()) throw InvalidArgument("inverse: element is not invertible");
  auto y = M.solve(u);
  if (!y) throw InvalidArgument("inverse: element is not invertible");
  return B.apply(*y);
}

// Fisher-Yates on top of Rng so samples do not depend on the standard library.
std::vector<std::size_t> random_perm(std::size_t n, Rng& rng) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i) - 1))]);
  return p;
}

// Random rational unitary (orthogonal when real_only) n×n matrix.
ExactMatrix random_unitary(std::size_t n, Rng& rng, bool real_only) {
  ExactMatrix u = ExactMatrix::identity(n);
  if (n == 0) return u;
  auto perm = random_perm(n, rng);
  ExactMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i) p(i, perm[i]) = ExactScalar(rng.coin() ? 1 : -1);
  u = p * u;
  if (n >= 2) {
    int rots = static_cast<int>(rng.uniform(1, 2));
    for (int k = 0; k < rots; ++k) {
      auto a = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
      auto b = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 2));
      if (b >= a) ++b;
      ExactMatrix r = ExactMatrix::identity(n);
      ExactScalar cs(Rational(3, 5)), sn(Rational(rng.coin() ? 4 : -4, 5));
      r(a, a) = cs;
      r(b, b) = cs;
      r(a, b) = -sn;
      r(b, a) = sn;
      u = r * u;
    }
  }
  if (!real_only) {
    ExactMatrix ph(n, n);
    static const ExactScalar phases[4] = {ExactScalar(1), ExactScalar(Rational(0), Rational(1)), ExactScalar(-1),
                                          ExactScalar(Rational(0), Rational(-1))};
    for (std::size_t i = 0; i < n; ++i) ph(i, i) = phases[rng.uniform(0, 3)];
    u = ph * u;
  }
  return u;
}

}  // namespace

Vec triple_product(const JordanTriple& t, CVec u, CVec v, CVec w) {
  check_len(t, u, "triple_product");
  check_len(t, v, "triple_product");
  check_len(t, w, "triple_product");
  Vec out(t.dim());
  auto su = support(u), sv = support(v), sw = support(w);
  for (auto i : su)
    for (auto j : sv) {
      ExactScalar f = u[i] * v[j].conj();
      for (auto k : sw) {
        ExactScalar g = f * w[k];
        for (const auto& [r, x] : t.tensor(i, j, k)) out[r] += g * x;
      }
    }
  return out;
}

ExactMatrix box(const JordanTriple& t, CVec u, CVec v) {
  check_len(t, u, "box");
  check_len(t, v, "box");
  const std::size_t d = t.dim();
  ExactMatrix m(d, d);
  auto su = support(u), sv = support(v);
  for (auto i : su)
    for (auto j : sv) {
      ExactScalar f = u[i] * v[j].conj();
      for (std::size_t k = 0; k < d; ++k)
        for (const auto& [r, x] : t.tensor(i, j, k)) m(r, k) += f * x;
    }
  return m;
}

Vec Q(const JordanTriple& t, CVec x, CVec y) {
  return vec_scale(ExactScalar(Rational(1, 2)), triple_product(t, x, y, x));
}

ExactMatrix Q_matrix(const JordanTriple& t, CVec x) {
  check_len(t, x, "Q_matrix");
  const std::size_t d = t.dim();
  ExactMatrix m(d, d);
  for (std::size_t k = 0; k < d; ++k) m.set_column(k, Q(t, x, unit_vector(d, k)));
  return m;
}

ExactMatrix bergman(const JordanTriple& t, CVec x, CVec y) {
  return ExactMatrix::identity(t.dim()) - box(t, x, y) + Q_matrix(t, x) * Q_matrix(t, y).conj();
}

bool is_tripotent(const JordanTriple& t, CVec c) {
  check_len(t, c, "is_tripotent");
  return triple_product(t, c, c, c) == vec_scale(ExactScalar(2), c);
}

Subspace PeirceDecomposition::space(int k) const {
  const ExactMatrix& p = k == 2 ? P2 : k == 1 ? P1 : P0;
  if (k < 0 || k > 2) throw InvalidArgument("Peirce index must be 0, 1 or 2");
  return Subspace::span(columns(p), p.rows());
}

PeirceDecomposition peirce(const JordanTriple& t, CVec c, bool with_subtriple) {
  check_len(t, c, "peirce");
  const std::size_t d = t.dim();
  auto pr = projections(t, c);
  PeirceDecomposition pd{Vec(c.begin(), c.end()), pr.P2, pr.P1, pr.P0, {}, nullptr};
  const ExactMatrix* P[3] = {&pd.P0, &pd.P1, &pd.P2};
  if (*P[0] + *P[1] + *P[2] != ExactMatrix::identity(d)) throw InvariantViolation("peirce: P0 + P1 + P2 != I");
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      ExactMatrix prod = *P[a] * *P[b];
      if (a == b ? prod != *P[a] : !prod.is_zero())
        throw InvariantViolation("peirce: projections P" + std::to_string(a) + ", P" + std::to_string(b) +
                                 " violate idempotence/orthogonality");
    }
  std::vector<Vec> bases[3];
  for (int k = 0; k < 3; ++k) bases[k] = dense_basis(pd.space(k));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int g = 0; g < 3; ++g) {
        int target = a - b + g;
        for (const auto& x : bases[a])
          for (const auto& y : bases[b])
            for (const auto& z : bases[g]) {
              Vec p = triple_product(t, x, y, z);
              bool ok = target < 0 || target > 2 ? vec_is_zero(p) : P[target]->apply(p) == p;
              if (!ok)
                throw InvariantViolation("peirce: multiplication rule fails for E" + std::to_string(a) + " E" +
                                         std::to_string(b) + "* E" + std::to_string(g));
            }
      }
  pd.w_basis = bases[0];
  if (with_subtriple) pd.w = JordanTriple::restrict_to(t, pd.w_basis);
  return pd;
}

const std::vector<Vec>& standard_frame(const JordanTriple& t) { return t.frame(); }

const Subspace& JointPeirce::block(unsigned i, unsigned j) const {
  auto it = blocks.find({std::min(i, j), std::max(i, j)});
  if (it == blocks.end()) throw InvalidArgument("joint Peirce block index out of range");
  return it->second;
}

JointPeirce joint_peirce(const JordanTriple& t, const std::vector<Vec>& frame) {
  const std::size_t d = t.dim();
  const auto r = static_cast<unsigned>(frame.size());
  std::vector<ExactMatrix> D;
  for (const auto& e : frame) D.push_back(box(t, e, e));
  for (unsigned a = 0; a < r; ++a)
    for (unsigned b = a + 1; b < r; ++b)
      if (D[a] * D[b] != D[b] * D[a]) throw InvariantViolation("joint_peirce: frame operators do not commute");
  JointPeirce jp;
  jp.frame = frame;
  Subspace total(d);
  std::size_t dims = 0;
  for (unsigned i = 0; i <= r; ++i)
    for (unsigned j = i; j <= r; ++j) {
      if (i == 0 && j == 0 && r == 0) {
        jp.blocks[{0, 0}] = Subspace::full(d);
        total = Subspace::full(d);
        dims = d;
        continue;
      }
      ExactMatrix stacked(r * d, d);
      for (unsigned k = 0; k < r; ++k) {
        int lambda = (k + 1 == i ? 1 : 0) + (k + 1 == j ? 1 : 0);
        ExactMatrix m = D[k] - ExactScalar(lambda) * ExactMatrix::identity(d);
        for (std::size_t a = 0; a < d; ++a)
          for (std::size_t b = 0; b < d; ++b) stacked(k * d + a, b) = m(a, b);
      }
      Subspace s = Subspace::span(stacked.nullspace(), d);
      dims += s.dim();
      total = Subspace::sum(total, s);
      jp.blocks[{i, j}] = std::move(s);
    }
  if (dims != d || total.dim() != d) throw InvariantViolation("joint_peirce: blocks do not decompose E");
  return jp;
}

unsigned rank_of(const JordanTriple& t, CVec z) {
  check_len(t, z, "rank_of");
  switch (t.family()) {
    case Family::matrix:
    case Family::symmetric:
      return static_cast<unsigned>(t.to_matrix(z).rank());
    case Family::antisymmetric:
      return static_cast<unsigned>(t.to_matrix(z).rank() / 2);
    case Family::spin: {
      if (vec_is_zero(z)) return 0;
      ExactScalar dot;
      for (const auto& x : z) dot += x * x;
      return dot.is_zero() ? 1 : 2;
    }
    case Family::zero:
      return 0;
    case Family::generic:
      break;
  }
  throw InvalidArgument("rank_of: no closed form for " + t.descriptor());
}

ExactScalar minor(const JordanTriple& t, unsigned m, CVec z) {
  check_len(t, z, "minor");
  if (m == 0) return ExactScalar(1);
  return t.minor_poly(m).eval(z);
}

Poly conical_poly(const JordanTriple& t, std::span<const unsigned> lambda) {
  if (lambda.size() > t.rank()) throw InvalidArgument("conical: partition longer than rank");
  Poly p = Poly::constant(t.dim(), ExactScalar(1));
  for (std::size_t m = 0; m < lambda.size(); ++m) {
    unsigned next = m + 1 < lambda.size() ? lambda[m + 1] : 0;
    if (lambda[m] < next) throw InvalidArgument("conical: partition not non-increasing");
    if (lambda[m] > next) p = p * t.minor_poly(static_cast<unsigned>(m + 1)).pow(lambda[m] - next);
  }
  return p;
}

ExactScalar conical(const JordanTriple& t, std::span<const unsigned> lambda, CVec z) {
  check_len(t, z, "conical");
  ExactScalar v(1);
  for (std::size_t m = 0; m < lambda.size(); ++m) {
    unsigned next = m + 1 < lambda.size() ? lambda[m + 1] : 0;
    if (lambda[m] < next) throw InvalidArgument("conical: partition not non-increasing");
    if (lambda[m] > next) v *= pow(minor(t, static_cast<unsigned>(m + 1), z), lambda[m] - next);
  }
  return v;
}

ExactScalar determinant(const JordanTriple& t, CVec z) { return minor(t, t.rank(), z); }

ExactMatrix quadratic_rep(const JordanTriple& t, CVec z, CVec c) { return Q_matrix(t, z) * Q_matrix(t, c).conj(); }

ExactMatrix quadratic_rep(const JordanTriple& t, CVec z) {
  Vec e = t.frame_sum(t.rank());
  return quadratic_rep(t, z, e);
}

Vec inverse_in(const JordanTriple& t, CVec c, CVec u) {
  check_len(t, u, "inverse");
  return inverse_with(t, projections(t, c).P2, c, u);
}

Vec inverse(const JordanTriple& t, CVec z) {
  Vec e = t.frame_sum(t.rank());
  return inverse_in(t, e, z);
}

Vec omega(const JordanTriple& t, const PeirceDecomposition& pd, CVec z) {
  check_len(t, z, "omega");
  Vec u = pd.P2.apply(z), v = pd.P1.apply(z), w = pd.P0.apply(z);
  Vec uinv;
  try {
    uinv = inverse_with(t, pd.P2, pd.c, u);
  } catch (const InvalidArgument&) {
    throw InvalidArgument("omega: z not in Omega (Peirce 2-component is singular)");
  }
  Vec ustar = Q(t, pd.c, uinv);
  return vec_sub(w, Q(t, v, ustar));
}

Vec omega(const JordanTriple& t, CVec c, CVec z) {
  auto pr = projections(t, c);
  PeirceDecomposition pd{Vec(c.begin(), c.end()), pr.P2, pr.P1, pr.P0, {}, nullptr};
  return omega(t, pd, z);
}

Vec ChainStratum::to_w(CVec x) const {
  auto y = embed.solve(x);
  if (!y) throw InvalidArgument("chain stratum: vector does not lie in the Peirce 0-space");
  return *y;
}

namespace {

ChainStratum build_stratum(const TriplePtr& tp, unsigned l) {
  const JordanTriple& t = *tp;
  const std::size_t d = t.dim();
  ChainStratum cs;
  cs.l = l;
  cs.c = t.frame_sum(l);
  if (l == 0) {
    cs.w = tp;
    cs.embed = ExactMatrix::identity(d);
    return cs;
  }
  const auto& p = t.params();
  TripleParams wp{Family::zero, 0, 0, 0};
  std::size_t off = 0;
  switch (t.family()) {
    case Family::matrix:
      if (p.r > l) wp = {Family::matrix, p.r - l, p.s - l, 0};
      off = l;
      break;
    case Family::symmetric:
      if (p.n > l) wp = {Family::symmetric, 0, 0, p.n - l};
      off = l;
      break;
    case Family::antisymmetric:
      if (p.n > 2 * l) wp = {Family::antisymmetric, 0, 0, p.n - 2 * l};
      off = 2 * l;
      break;
    case Family::spin:
      if (l == 1) wp = {Family::matrix, 1, 1, 0};
      break;
    case Family::zero:
    case Family::generic:
      throw InvalidArgument("chain_stratum: needs a family triple with l <= rank");
  }
  cs.w = JordanTriple::make(wp, false);
  const JordanTriple& w = *cs.w;
  cs.embed = ExactMatrix(d, w.dim());
  if (t.has_matrix_form()) {
    ExactMatrix shape = t.to_matrix(Vec(d));
    for (std::size_t k = 0; k < w.dim(); ++k) {
      ExactMatrix mw = w.to_matrix(unit_vector(w.dim(), k));
      ExactMatrix me(shape.rows(), shape.cols());
      for (std::size_t i = 0; i < mw.rows(); ++i)
        for (std::size_t j = 0; j < mw.cols(); ++j) me(i + off, j + off) = mw(i, j);
      cs.embed.set_column(k, t.from_matrix(me));
    }
  } else if (t.family() == Family::spin && l == 1) {
    cs.embed.set_column(0, t.frame()[1]);
  }
  // Checks: range, homomorphism, metric, frame.
  const std::string tag = "chain stratum " + t.descriptor() + " l=" + std::to_string(l) + ": ";
  auto pr = projections(t, cs.c);
  std::vector<Vec> cols = columns(cs.embed);
  if (Subspace::span(cols, d) != Subspace::span(columns(pr.P0), d))
    throw InvariantViolation(tag + "embedding does not span the Peirce 0-space");
  const std::size_t k = w.dim();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t m = 0; m < k; ++m) {
        Vec lhs = cs.embed.apply(to_dense(w.tensor(i, j, m), k));
        if (lhs != triple_product(t, cols[i], cols[j], cols[m]))
          throw InvariantViolation(tag + "embedding is not a triple homomorphism");
      }
  if (cs.embed.transpose() * t.metric() * cs.embed.conj() != w.metric())
    throw InvariantViolation(tag + "embedding is not isometric");
  for (std::size_t j = 0; j < w.rank(); ++j)
    if (cs.embed.apply(w.frame()[j]) != t.frame()[l + j]) throw InvariantViolation(tag + "frames do not match");
  return cs;
}

}  // namespace

const ChainStratum& chain_stratum(const TriplePtr& t, unsigned l) {
  if (l > t->rank()) throw InvalidArgument("chain_stratum: l exceeds rank");
  static std::mutex mu;
  static std::map<std::pair<std::string, unsigned>, std::unique_ptr<ChainStratum>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{t->descriptor(), l}];
  if (!slot) slot = std::make_unique<ChainStratum>(build_stratum(t, l));
  return *slot;
}

ExactMatrix random_k(const JordanTriple& t, Rng& rng) {
  const std::size_t d = t.dim();
  ExactMatrix k(d, d);
  if (t.has_matrix_form()) {
    ExactMatrix shape = t.to_matrix(Vec(d));
    const std::size_t R = shape.rows(), C = shape.cols();
    bool real_only = false;
    ExactMatrix U = random_unitary(R, rng, real_only);
    ExactMatrix V;
    if (t.family() == Family::matrix) {
      ExactMatrix v1 = random_unitary(R, rng, real_only);
      ExactMatrix v2 = random_unitary(C - R, rng, real_only);
      V = ExactMatrix(C, C);
      for (std::size_t i = 0; i < R; ++i)
        for (std::size_t j = 0; j < R; ++j) V(i, j) = v1(i, j);
      for (std::size_t i = 0; i < C - R; ++i)
        for (std::size_t j = 0; j < C - R; ++j) V(R + i, R + j) = v2(i, j);
    } else {
      V = U.transpose();
    }
    for (std::size_t j = 0; j < d; ++j) k.set_column(j, t.from_matrix(U * t.to_matrix(unit_vector(d, j)) * V));
  } else if (t.family() == Family::spin) {
    ExactMatrix R = random_unitary(d, rng, true);
    static const ExactScalar phases[4] = {ExactScalar(1), ExactScalar(Rational(0), Rational(1)), ExactScalar(-1),
                                          ExactScalar(Rational(0), Rational(-1))};
    k = phases[rng.uniform(0, 3)] * R;
  } else if (t.family() == Family::zero) {
    return k;
  } else {
    throw InvalidArgument("random_k: no structure group sampler for " + t.descriptor());
  }
  return k;
}

bool is_automorphism(const JordanTriple& t, const ExactMatrix& k) {
  const std::size_t d = t.dim();
  auto cols = columns(k);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t m = 0; m < d; ++m)
        if (k.apply(to_dense(t.tensor(i, j, m), d)) != triple_product(t, cols[i], cols[j], cols[m])) return false;
  return true;
}

Vec frame_point(const JordanTriple& t, std::span<const Rational> q) {
  if (q.size() > t.rank()) throw InvalidArgument("frame_point: more coefficients than rank");
  Vec z(t.dim());
  for (std::size_t j = 0; j < q.size(); ++j) z = vec_add(z, vec_scale(ExactScalar(q[j]), t.frame()[j]));
  return z;
}

Vec random_point_of_rank(const JordanTriple& t, unsigned l, Rng& rng) {
  std::vector<Rational> q;
  for (unsigned j = 0; j < l; ++j) q.push_back(rng.nonzero_rational());
  return random_k(t, rng).apply(frame_point(t, q));
}

}  // namespace jtk
