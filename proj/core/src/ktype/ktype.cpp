#include "jtk/ktype/ktype.hpp"

#include <map>
#include <string>

#include "jtk/error.hpp"
#include "jtk/jordan/ops.hpp"

namespace jtk {

KTypeSpace::KTypeSpace(const JordanTriple& t, Partition lambda, PolySubspace space, std::vector<Poly> basis,
                       unsigned rounds)
    : fock_(t.fock_ptr()), lambda_(std::move(lambda)), space_(std::move(space)), basis_(std::move(basis)), rounds_(rounds) {}

const ExactMatrix& KTypeSpace::gram() const {
  std::call_once(gram_once_, [this] { gram_ = fock_->gram_of(basis_); });
  return gram_;
}

std::vector<ExactMatrix> box_operator_basis(const JordanTriple& t) {
  const std::size_t d = t.dim();
  SpanBuilder sb(d * d);
  std::vector<ExactMatrix> out;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      ExactMatrix b = box(t, unit_vector(d, i), unit_vector(d, j));
      Vec flat(d * d);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) flat[r * d + c] = b(r, c);
      if (sb.insert(flat)) out.push_back(std::move(b));
    }
  return out;
}

std::size_t homogeneous_dim(std::size_t d, unsigned n) {
  if (d == 0) return n == 0 ? 1 : 0;
  // C(n + d - 1, d - 1)
  std::size_t num = 1;
  for (std::size_t k = 1; k < d; ++k) num = num * (n + k) / k;
  return num;
}

namespace {

KTypePtr build_ktype(const JordanTriple& t, const Partition& lambda) {
  if (lambda.length() > t.rank())
    throw InvalidArgument("partition " + lambda.str() + " longer than rank of " + t.descriptor());
  const unsigned n = lambda.size();
  auto index = MonomialIndex::get(t.dim(), n, n);
  Poly seed = conical_poly(t, lambda.parts());
  auto ops = box_operator_basis(t);
  SpanBuilder sb(index->size());
  std::vector<Poly> basis;
  sb.insert(to_coords(seed, *index));
  basis.push_back(seed);
  unsigned rounds = 0;
  std::size_t begin = 0;
  while (begin < basis.size()) {
    ++rounds;
    std::size_t end = basis.size();
    for (std::size_t k = begin; k < end; ++k)
      for (const auto& a : ops) {
        Poly q = basis[k].derive(a);
        if (sb.insert(to_coords(q, *index))) basis.push_back(std::move(q));
      }
    begin = end;
  }
  if (rounds > index->size() + 1) throw InvariantViolation("ktype closure did not stabilize");
  PolySubspace space(index, sb.finish());
  return std::make_shared<const KTypeSpace>(t, lambda, std::move(space), std::move(basis), rounds);
}

}  // namespace

KTypePtr ktype_space(const JordanTriple& t, const Partition& lambda) {
  if (t.family() == Family::generic) return build_ktype(t, lambda);
  static std::mutex mu;
  static std::map<std::pair<std::string, Partition>, KTypePtr> cache;
  auto key = std::make_pair(t.descriptor(), lambda);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  KTypePtr k = build_ktype(t, lambda);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, k).first->second;
}

Poly ktype_project(const JordanTriple& t, const Poly& f, const Partition& lambda) {
  if (f.nvars() != t.dim()) throw DimensionMismatch("ktype_project: polynomial has wrong number of variables");
  if (f.is_zero()) return f;
  if (!f.is_homogeneous() || static_cast<unsigned>(f.degree()) != lambda.size())
    throw InvalidArgument("ktype_project: f must be homogeneous of degree |lambda|");
  auto k = ktype_space(t, lambda);
  Vec rhs(k->dim());
  for (std::size_t i = 0; i < k->dim(); ++i) rhs[i] = t.fock().inner(k->basis()[i], f);
  auto x = k->gram().solve(rhs);
  if (!x) throw InvariantViolation("ktype_project: singular Fock Gram matrix");
  Poly out(t.dim());
  for (std::size_t i = 0; i < k->dim(); ++i)
    if (!(*x)[i].is_zero()) out += (*x)[i] * k->basis()[i];
  return out;
}

Decomposition decompose(const JordanTriple& t, const Poly& f) {
  if (f.nvars() != t.dim()) throw DimensionMismatch("decompose: polynomial has wrong number of variables");
  Decomposition dec;
  dec.residual = f;
  if (f.is_zero()) return dec;
  for (int n = f.min_degree(); n <= f.degree(); ++n) {
    Poly h = f.homogeneous_part(static_cast<unsigned>(n));
    if (h.is_zero()) continue;
    for (const auto& lam : partitions_of(static_cast<unsigned>(n), t.rank())) {
      Poly c = ktype_project(t, h, lam);
      if (c.is_zero()) continue;
      dec.residual -= c;
      dec.components.emplace_back(lam, std::move(c));
    }
  }
  return dec;
}

SesquiPoly fock_kernel(const JordanTriple& t, const Partition& lambda) {
  auto k = ktype_space(t, lambda);
  ExactMatrix ginv = k->gram().inverse();
  SesquiPoly e(t.dim());
  for (std::size_t i = 0; i < k->dim(); ++i)
    for (std::size_t j = 0; j < k->dim(); ++j)
      if (!ginv(i, j).is_zero()) e += ginv(i, j) * SesquiPoly::outer(k->basis()[i], k->basis()[j]);
  return e;
}

Poly spherical(const JordanTriple& t, const Partition& lambda) {
  if (!t.is_tube()) throw InvalidArgument("spherical polynomials need a tube-type triple");
  Vec e = t.frame_sum(t.rank());
  SesquiPoly k = fock_kernel(t, lambda);
  ExactScalar norm = k.eval(e, e);
  if (norm.is_zero()) throw InvariantViolation("spherical: E(e,e) vanishes");
  return (ExactScalar(1) / norm) * k.at_second(e);
}

std::vector<DimsEntry> dims_report(const JordanTriple& t, unsigned n) {
  std::vector<DimsEntry> out;
  auto index = MonomialIndex::get(t.dim(), n, n);
  Subspace total(index->size());
  std::size_t sum = 0;
  for (const auto& lam : partitions_of(n, t.rank())) {
    auto k = ktype_space(t, lam);
    out.push_back({lam, k->dim()});
    sum += k->dim();
    total = Subspace::sum(total, k->space().space());
  }
  if (sum != index->size() || total.dim() != index->size())
    throw InvariantViolation("dims_report: K-types of degree " + std::to_string(n) + " on " + t.descriptor() +
                             " have total dimension " + std::to_string(sum) + ", span " + std::to_string(total.dim()) +
                             ", expected " + std::to_string(index->size()));
  return out;
}

}  // namespace jtk
