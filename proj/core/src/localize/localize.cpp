#include "jtk/localize/localize.hpp"

#include "jtk/error.hpp"
#include "jtk/ideals/ideals.hpp"
#include "jtk/ktype/ktype.hpp"

namespace jtk {

PolySubspace maximal_ideal_truncation(std::size_t nvars, CVec zeta, unsigned n) {
  if (zeta.size() != nvars) throw DimensionMismatch("maximal_ideal_truncation: point has wrong length");
  auto index = MonomialIndex::get(nvars, 0, n);
  SpanBuilder sb(index->size());
  for (auto m : index->monomials()) {
    if (mono::degree(m) == 0) continue;
    Poly p = Poly::monomial(nvars, m);
    p.add_term(0, -Poly::monomial(nvars, m).eval(zeta));
    sb.insert(to_coords(p, *index));
  }
  return PolySubspace(index, sb.finish());
}

FiberComputation fiber(const JordanTriple& t, const Partition& lambda, CVec zeta, unsigned n) {
  const std::size_t d = t.dim();
  if (zeta.size() != d) throw DimensionMismatch("fiber: point has wrong length");
  if (n < lambda.size()) throw InvalidArgument("fiber: degree bound below |lambda|");
  FiberComputation fc;
  fc.lambda = lambda;
  fc.zeta.assign(zeta.begin(), zeta.end());
  fc.degree = n;
  auto ideal = ideal_truncation(t, lambda, n);
  auto index = MonomialIndex::get(d, 0, n);
  SpanBuilder image(index->size());
  std::vector<Poly> shifts;
  for (unsigned i = 0; i < d; ++i) {
    Poly s = Poly::variable(d, i);
    s.add_term(0, -zeta[i]);
    shifts.push_back(std::move(s));
  }
  std::size_t dim_j = 0;
  for (unsigned m = 0; m <= n; ++m) {
    if (m > 0)
      for (const auto& q : ideal->piece(m - 1).basis())
        for (const auto& s : shifts) image.insert(to_coords(s * q, *index));
    dim_j += ideal->piece(m).dim();
    if (m >= lambda.size()) fc.dims.emplace_back(m, dim_j - image.dim());
  }
  std::size_t last = fc.dims.back().second;
  fc.fiber_dim = last;
  fc.stabilized = fc.dims.size() >= 2 && fc.dims[fc.dims.size() - 2].second == last;
  fc.stable_from = fc.dims.back().first;
  for (auto it = fc.dims.rbegin(); it != fc.dims.rend() && it->second == last; ++it) fc.stable_from = it->first;
  return fc;
}

Stratum stratum(const TriplePtr& t, const Partition& lambda, unsigned l) {
  const auto& cs = chain_stratum(t, l);
  return {l, cs.c, cs.w, cs.embed, lambda.drop_first(l)};
}

Poly normal_projection(const TriplePtr& t, unsigned l, const Poly& f) {
  const auto& cs = chain_stratum(t, l);
  return f.compose_affine(cs.embed, cs.c);
}

Poly lowest_type_projection(const TriplePtr& t, const Partition& lambda, unsigned l, const Poly& f) {
  const auto& cs = chain_stratum(t, l);
  Partition ls = lambda.drop_first(l);
  Poly g = f.compose_affine(cs.embed, cs.c).homogeneous_part(ls.size());
  return ktype_project(*cs.w, g, ls);
}

TheoremRResult theorem_r_check(const TriplePtr& t, const Partition& lambda, unsigned l, unsigned n) {
  TheoremRResult res;
  const auto& cs = chain_stratum(t, l);
  res.lambda_star = lambda.drop_first(l);
  auto ideal = ideal_truncation(*t, lambda, n);
  auto target = ideal_truncation(*cs.w, res.lambda_star, std::max(n, res.lambda_star.size()));
  for (const auto& f : ideal->basis_upto(n)) {
    ++res.checked;
    Poly g = f.compose_affine(cs.embed, cs.c);
    if (g.is_zero()) continue;
    for (int m = g.min_degree(); m <= g.degree(); ++m) {
      Poly h = g.homogeneous_part(static_cast<unsigned>(m));
      if (h.is_zero() || target->piece(static_cast<unsigned>(m)).contains(h)) continue;
      res.ok = false;
      std::string bad;
      for (const auto& [mu, comp] : decompose(*cs.w, h).components)
        if (!mu.contains(res.lambda_star)) bad += (bad.empty() ? "" : ",") + mu.str();
      res.counterexample = "degree " + std::to_string(m) + " component(s) " + bad + " not above " +
                           res.lambda_star.str() + " for f = " + f.str();
      return res;
    }
  }
  return res;
}

TheoremWResult theorem_w_check(const TriplePtr& t, const Partition& lambda, unsigned l, unsigned n) {
  TheoremWResult res;
  const auto& cs = chain_stratum(t, l);
  const JordanTriple& w = *cs.w;
  res.lambda_star = lambda.drop_first(l);
  const unsigned k = res.lambda_star.size();
  auto target = ktype_space(w, res.lambda_star);
  res.target_dim = target->dim();
  auto ideal = ideal_truncation(*t, lambda, n);

  // (i) surjectivity.
  auto tindex = target->space().index();
  SpanBuilder img(tindex->size());
  for (const auto& f : ideal->basis_upto(n)) {
    Poly g = lowest_type_projection(t, lambda, l, f);
    if (!g.is_zero()) img.insert(to_coords(g, *tindex));
  }
  res.image_dim = img.dim();
  res.surjective = PolySubspace(tindex, img.finish()) == target->space();

  // (ii) M_c J ⊆ ker: π_c((z_i − c_i) q) = ℓ_i(w)·π_c(q) with ℓ_i(w) = (embed w)_i.
  std::vector<Poly> lin;
  for (std::size_t i = 0; i < t->dim(); ++i) {
    Vec row(w.dim());
    for (std::size_t j = 0; j < w.dim(); ++j) row[j] = cs.embed(i, j);
    lin.push_back(vec_is_zero(row) ? Poly(w.dim()) : Poly::linear(row));
  }
  if (n >= 1) {
    for (const auto& q : ideal->basis_upto(n - 1)) {
      Poly g = q.compose_affine(cs.embed, cs.c);
      for (const auto& li : lin) {
        ++res.kernel_checked;
        if (li.is_zero()) continue;
        Poly h = (li * g).homogeneous_part(k);
        if (!ktype_project(w, h, res.lambda_star).is_zero()) res.kernel_contained = false;
      }
    }
  }

  // (iii) fiber dimension at c.
  res.fiber = fiber(*t, lambda, cs.c, n);
  res.dims_match = res.fiber.stabilized && res.fiber.fiber_dim == res.target_dim;
  return res;
}

std::vector<Vec> stratum_points(const JordanTriple& t, unsigned l, unsigned count, Rng& rng) {
  std::vector<Vec> pts;
  if (count == 0) return pts;
  pts.push_back(t.frame_sum(l));
  while (pts.size() < count) {
    Vec z = random_point_of_rank(t, l, rng);
    pts.push_back(z);
    if (pts.size() == count) break;
    ExactScalar small(Rational(1, 3));
    for (int attempt = 0; attempt < 10; ++attempt) {
      ExactMatrix b = bergman(t, vec_scale(small, rng.vec(t.dim())), vec_scale(small, rng.vec(t.dim())));
      if (b.rank() == t.dim()) {
        pts.push_back(b.apply(z));
        break;
      }
    }
  }
  return pts;
}

HomogeneityResult stratum_homogeneity_check(const JordanTriple& t, const Partition& lambda, unsigned l,
                                            const std::vector<Vec>& points, unsigned n) {
  for (const auto& z : points)
    if (rank_of(t, z) != l)
      throw InvalidArgument("stratum_homogeneity_check: point " + vec_str(z) + " does not have rank " + std::to_string(l));
  HomogeneityResult res;
  for (const auto& z : points) {
    res.fibers.push_back(fiber(t, lambda, z, n));
    const auto& f = res.fibers.back();
    if (!f.stabilized || f.fiber_dim != res.fibers.front().fiber_dim) res.ok = false;
  }
  return res;
}

bool cross_section_enabled() noexcept {
#ifdef JTK_ENABLE_CROSS_SECTION
  return true;
#else
  return false;
#endif
}

#ifdef JTK_ENABLE_CROSS_SECTION
std::optional<CrossSection> CrossSection::build(const TriplePtr& t, const Partition& lambda, unsigned l, Rng& rng) {
  const auto& cs = chain_stratum(t, l);
  const JordanTriple& w = *cs.w;
  CrossSection x;
  x.lambda_star_ = lambda.drop_first(l);
  const Partition& ls = x.lambda_star_;
  std::vector<unsigned> hat = lambda.padded(t->rank()), prime = hat;
  for (unsigned i = 0; i < l; ++i) hat[i] = ls.length() > 0 ? ls[0] : 0;
  for (std::size_t i = 0; i < prime.size(); ++i) prime[i] -= hat[i];
  Poly nw = conical_poly(w, ls.parts());
  Poly nhat = conical_poly(*t, hat);
  x.n_prime_ = conical_poly(*t, prime);
  auto target = ktype_space(w, ls);
  x.index_ = target->space().index();
  const std::size_t rows = x.index_->size();

  // k_0 = identity, so column 0 is N_W^{λ*} itself.
  std::vector<Vec> cols{to_dense(to_coords(nw, *x.index_), rows)};
  x.lifts_.push_back(nhat);
  SpanBuilder sb(rows);
  sb.insert(to_coords(nw, *x.index_));
  ExactScalar small(Rational(1, 4));
  const std::size_t budget = 20 * target->dim() + 20;
  while (sb.dim() < target->dim() && x.samples_ < budget) {
    ++x.samples_;
    Vec a = vec_scale(small, rng.vec(w.dim())), b = vec_scale(small, rng.vec(w.dim()));
    ExactMatrix bw = bergman(w, a, b);
    if (bw.rank() != w.dim()) continue;
    Poly g = nw.compose_linear(bw);
    if (!sb.insert(to_coords(g, *x.index_))) continue;
    cols.push_back(to_dense(to_coords(g, *x.index_), rows));
    x.lifts_.push_back(nhat.compose_linear(bergman(*t, cs.embed.apply(a), cs.embed.apply(b))));
  }
  if (sb.dim() < target->dim()) return std::nullopt;
  x.translates_ = ExactMatrix::from_columns(cols, rows);
  return x;
}

Poly CrossSection::operator()(const Poly& phi) const {
  auto coef = phi.is_zero() ? std::optional<Vec>(Vec(lifts_.size()))
                            : translates_.solve(to_dense(to_coords(phi, *index_), index_->size()));
  if (!coef) throw InvalidArgument("cross_section: argument is not in P_W^" + lambda_star_.str());
  Poly sum(n_prime_.nvars());
  for (std::size_t i = 0; i < lifts_.size(); ++i)
    if (!(*coef)[i].is_zero()) sum += (*coef)[i] * lifts_[i];
  return n_prime_ * sum;
}
#else
std::optional<CrossSection> CrossSection::build(const TriplePtr&, const Partition&, unsigned, Rng&) {
  return std::nullopt;
}

Poly CrossSection::operator()(const Poly&) const {
  throw InvalidArgument("cross_section: built without JTK_ENABLE_CROSS_SECTION");
}
#endif

CrossSectionResult cross_section_check(const TriplePtr& t, const Partition& lambda, unsigned l, Rng& rng) {
  CrossSectionResult res;
  res.lambda_star = lambda.drop_first(l);
  if (!cross_section_enabled()) return res;
  auto cs = CrossSection::build(t, lambda, l, rng);
  if (!cs) {
    res.status = CrossSectionStatus::sampling_exhausted;
    return res;
  }
  res.samples = cs->samples();
  const auto& st = chain_stratum(t, l);
  auto target = ktype_space(*st.w, res.lambda_star);
  res.basis_size = target->dim();
  res.conical_ok = (*cs)(conical_poly(*st.w, res.lambda_star.parts())) == conical_poly(*t, lambda.parts());
  bool ok = res.conical_ok;
  auto big = ktype_space(*t, lambda);
  for (const auto& phi : target->basis()) {
    Poly lp = (*cs)(phi);
    if (!big->space().contains(lp) || lowest_type_projection(t, lambda, l, lp) != phi) ok = false;
  }
  res.status = ok ? CrossSectionStatus::ok : CrossSectionStatus::failed;
  return res;
}

}  // namespace jtk
