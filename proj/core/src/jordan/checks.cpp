#include "jtk/jordan/checks.hpp"

#include "jtk/error.hpp"

namespace jtk {

ExactScalar inner(const JordanTriple& t, CVec x, CVec y) {
  ExactScalar s;
  for (std::size_t i = 0; i < t.dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < t.dim(); ++j) s += x[i] * t.metric()(i, j) * y[j].conj();
  }
  return s;
}

IdentityCheck axioms_check(const JordanTriple& t) {
  IdentityCheck res;
  try {
    t.verify();
  } catch (const InvariantViolation& e) {
    res.fail(e.what());
  }
  res.checked = t.dim() * t.dim() * t.dim() * t.dim();
  return res;
}

IdentityCheck peirce_rules_check(const JordanTriple& t, CVec c) {
  IdentityCheck res;
  auto pd = peirce(t, c, false);
  if (pd.P0 + pd.P1 + pd.P2 != ExactMatrix::identity(t.dim())) res.fail("Peirce projections do not resolve the identity");
  std::vector<Subspace> spaces{pd.space(0), pd.space(1), pd.space(2)};
  std::vector<std::vector<Vec>> bases(3);
  for (int k = 0; k < 3; ++k)
    for (const auto& v : spaces[k].basis()) bases[k].push_back(to_dense(v, t.dim()));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const int target = i - j + k;
        for (const auto& u : bases[i])
          for (const auto& v : bases[j])
            for (const auto& w : bases[k]) {
              ++res.checked;
              Vec p = triple_product(t, u, v, w);
              bool in = target >= 0 && target <= 2 ? spaces[target].contains(p) : vec_is_zero(p);
              if (!in)
                res.fail("{E" + std::to_string(i) + " E" + std::to_string(j) + "* E" + std::to_string(k) +
                         "} not in E" + std::to_string(target));
            }
      }
  return res;
}

IdentityCheck compression_check(const TriplePtr& t, unsigned l, unsigned points, Rng& rng) {
  if (l >= t->rank()) throw InvalidArgument("compression_check: need l < rank");
  IdentityCheck res;
  const auto& cs = chain_stratum(t, l);
  auto pd = peirce(*t, cs.c, false);
  unsigned done = 0;
  for (unsigned attempt = 0; done < points && attempt < 50 * points; ++attempt) {
    Vec z = rng.vec(t->dim());
    Vec om;
    try {
      om = omega(*t, pd, z);
    } catch (const InvalidArgument&) {
      continue;
    }
    ++done;
    Vec wz = cs.to_w(om);
    ExactScalar du = minor(*t, l, z);
    for (unsigned m = l + 1; m <= t->rank(); ++m) {
      ++res.checked;
      if (minor(*t, m, z) != du * minor(*cs.w, m - l, wz))
        res.fail("compression formula fails for l=" + std::to_string(l) + " m=" + std::to_string(m) + " at z=" + vec_str(z));
    }
  }
  if (done < points) res.fail("could not sample enough points with invertible Peirce 2-component");
  return res;
}

IdentityCheck cramer_check(const JordanTriple& t, unsigned points, Rng& rng) {
  if (!t.is_tube()) throw InvalidArgument("cramer_check: " + t.descriptor() + " is not of tube type");
  IdentityCheck res;
  Vec e = t.frame_sum(t.rank());
  const Poly& det = t.minor_poly(t.rank());
  std::vector<Poly> grad;
  for (unsigned i = 0; i < t.dim(); ++i) grad.push_back(det.partial(i));
  for (unsigned attempt = 0; res.checked < points && attempt < 50 * points; ++attempt) {
    Vec z = rng.vec(t.dim()), v = rng.vec(t.dim());
    ExactScalar dz = det.eval(z);
    if (dz.is_zero()) continue;
    ExactScalar lhs;
    for (unsigned i = 0; i < t.dim(); ++i) lhs += v[i] * grad[i].eval(z);
    ++res.checked;
    if (lhs != dz * inner(t, v, Q(t, e, inverse(t, z)))) res.fail("Cramer's rule fails at z=" + vec_str(z));
  }
  if (res.checked < points) res.fail("could not sample enough invertible points");
  return res;
}

}  // namespace jtk
