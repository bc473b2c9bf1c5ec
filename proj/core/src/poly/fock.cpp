#include "jtk/poly/fock.hpp"

#include "jtk/error.hpp"
#include "jtk/poly/sesqui.hpp"

namespace jtk {
namespace {

Rational factorial(unsigned n) {
  Rational f(1);
  for (unsigned k = 2; k <= n; ++k) f *= Rational(static_cast<std::int64_t>(k));
  return f;
}

}  // namespace

FockSpace::FockSpace(ExactMatrix metric) : g_(std::move(metric)) {
  if (!g_.is_square()) throw DimensionMismatch("FockSpace: metric not square");
  if (g_.conj_transpose() != g_) throw InvalidArgument("FockSpace: metric not hermitian");
  diagonal_ = true;
  for (std::size_t i = 0; i < g_.rows(); ++i) {
    for (std::size_t j = 0; j < g_.cols(); ++j) {
      if (i != j && !g_(i, j).is_zero()) diagonal_ = false;
    }
    if (!g_(i, i).is_real() || g_(i, i).re().sign() <= 0) {
      if (diagonal_) throw InvalidArgument("FockSpace: metric not positive definite");
    }
  }
  if (diagonal_) {
    for (std::size_t i = 0; i < g_.rows(); ++i) ginv_.push_back(g_(i, i).re().inverse());
  }
}

Rational FockSpace::diag_weight(Monomial m) const {
  Rational w(1);
  for (unsigned v = 0; v < nvars(); ++v) {
    unsigned e = mono::exp(m, v);
    if (e == 0) continue;
    w *= factorial(e);
    for (unsigned k = 0; k < e; ++k) w *= ginv_[v];
  }
  return w;
}

std::shared_ptr<const FockGram> FockSpace::gram(unsigned degree) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto& slot = cache_[degree];
  if (!slot) slot = build(degree);
  return slot;
}

std::shared_ptr<const FockGram> FockSpace::build(unsigned degree) const {
  auto gram = std::make_shared<FockGram>();
  const std::size_t n = nvars();
  gram->index = MonomialIndex::get(n, degree, degree);
  const auto& monos = gram->index->monomials();
  gram->rows.resize(monos.size());
  if (diagonal_) {
    gram->diagonal = true;
    for (std::size_t a = 0; a < monos.size(); ++a)
      gram->rows[a].emplace_back(static_cast<std::uint32_t>(a), ExactScalar(diag_weight(monos[a])));
    return gram;
  }
  SesquiPoly pair = SesquiPoly::pairing(g_);
  SesquiPoly pw = SesquiPoly::constant(n, ExactScalar(1));
  for (unsigned k = 0; k < degree; ++k) pw = SesquiPoly::mul_truncated(pw, pair, degree);
  ExactScalar inv_fact = ExactScalar(factorial(degree).inverse());
  ExactMatrix c(monos.size(), monos.size());
  for (const auto& [key, coef] : pw.terms()) {
    auto a = gram->index->find(key.first);
    auto b = gram->index->find(key.second);
    c(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = coef * inv_fact;
  }
  ExactMatrix g = c.conj_transpose().inverse();
  for (std::size_t a = 0; a < monos.size(); ++a) gram->rows[a] = to_sparse(g.row(a));
  return gram;
}

ExactScalar FockSpace::inner(const Poly& p, const Poly& q) const {
  if (p.nvars() != nvars() || q.nvars() != nvars()) throw DimensionMismatch("fock_inner: nvars mismatch");
  ExactScalar acc;
  if (diagonal_) {
    auto it = p.terms().begin();
    auto jt = q.terms().begin();
    while (it != p.terms().end() && jt != q.terms().end()) {
      if (it->first < jt->first) {
        ++it;
      } else if (jt->first < it->first) {
        ++jt;
      } else {
        acc += it->second.conj() * ExactScalar(diag_weight(it->first)) * jt->second;
        ++it;
        ++jt;
      }
    }
    return acc;
  }
  int dmax = std::min(p.degree(), q.degree());
  for (int d = 0; d <= dmax; ++d) {
    Poly pd = p.homogeneous_part(static_cast<unsigned>(d));
    Poly qd = q.homogeneous_part(static_cast<unsigned>(d));
    if (pd.is_zero() || qd.is_zero()) continue;
    auto gb = gram(static_cast<unsigned>(d));
    SparseVec pc = to_coords(pd, *gb->index);
    Vec qc = to_dense(to_coords(qd, *gb->index), gb->index->size());
    for (const auto& [a, pa] : pc) {
      ExactScalar row;
      for (const auto& [b, gab] : gb->rows[a]) {
        if (!qc[b].is_zero()) row += gab * qc[b];
      }
      acc += pa.conj() * row;
    }
  }
  return acc;
}

ExactMatrix FockSpace::gram_of(const std::vector<Poly>& ps) const {
  ExactMatrix g(ps.size(), ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i; j < ps.size(); ++j) {
      g(i, j) = inner(ps[i], ps[j]);
      if (j != i) g(j, i) = g(i, j).conj();
    }
  }
  return g;
}

ExactScalar fock_inner(const Poly& p, const Poly& q, const FockSpace& space) { return space.inner(p, q); }

}  // namespace jtk
