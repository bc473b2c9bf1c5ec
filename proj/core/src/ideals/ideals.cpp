#include "jtk/ideals/ideals.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>

#include "jtk/error.hpp"
#include "jtk/jordan/ops.hpp"
#include "jtk/ktype/ktype.hpp"

namespace jtk {

IdealTruncation::IdealTruncation(Partition lambda, unsigned n, std::vector<PolySubspace> pieces)
    : lambda_(std::move(lambda)), n_(n), pieces_(std::move(pieces)) {}

const PolySubspace& IdealTruncation::piece(unsigned m) const {
  if (m > n_) throw InvalidArgument("ideal truncation: degree " + std::to_string(m) + " beyond bound " + std::to_string(n_));
  return pieces_[m];
}

std::vector<Poly> IdealTruncation::basis_upto(unsigned m) const {
  std::vector<Poly> out;
  for (unsigned k = 0; k <= m; ++k)
    for (auto& p : piece(k).basis()) out.push_back(std::move(p));
  return out;
}

namespace {

PolySubspace next_piece(const PolySubspace& prev, std::size_t d, unsigned m) {
  auto index = MonomialIndex::get(d, m, m);
  if (prev.dim() == 0) return PolySubspace(index, Subspace(index->size()));
  if (prev.dim() == prev.index()->size()) return PolySubspace::full(index);
  SpanBuilder sb(index->size());
  for (const auto& q : prev.basis())
    for (unsigned i = 0; i < d; ++i) {
      sb.insert(to_coords(q * Poly::variable(d, i), *index));
      if (sb.dim() == index->size()) return PolySubspace::full(index);
    }
  return PolySubspace(index, sb.finish());
}

std::vector<PolySubspace> build_pieces(const JordanTriple& t, const Partition& lambda, unsigned n,
                                       std::vector<PolySubspace> pieces) {
  const std::size_t d = t.dim();
  const unsigned k = lambda.size();
  for (unsigned m = static_cast<unsigned>(pieces.size()); m <= n; ++m) {
    if (m < k) {
      auto index = MonomialIndex::get(d, m, m);
      pieces.emplace_back(index, Subspace(index->size()));
    } else if (m == k) {
      pieces.push_back(ktype_space(t, lambda)->space());
    } else {
      pieces.push_back(next_piece(pieces.back(), d, m));
    }
  }
  return pieces;
}

}  // namespace

IdealPtr ideal_truncation(const JordanTriple& t, const Partition& lambda, unsigned n) {
  if (n < lambda.size()) throw InvalidArgument("ideal_truncation: degree bound below |lambda|");
  if (lambda.length() > t.rank()) throw InvalidArgument("ideal_truncation: partition longer than rank");
  static std::mutex mu;
  static std::map<std::pair<std::string, Partition>, IdealPtr> cache;
  const bool cacheable = t.family() != Family::generic;
  auto key = std::make_pair(t.descriptor(), lambda);
  std::vector<PolySubspace> start;
  if (cacheable) {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) {
      if (it->second->degree() >= n) return it->second;
      for (unsigned m = 0; m <= it->second->degree(); ++m) start.push_back(it->second->piece(m));
    }
  }
  auto ideal = std::make_shared<const IdealTruncation>(lambda, n, build_pieces(t, lambda, n, std::move(start)));
  if (cacheable) {
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[key];
    if (!slot || slot->degree() < n) slot = ideal;
  }
  return ideal;
}

PolySubspace ktype_sum_above(const JordanTriple& t, const Partition& lambda, unsigned m) {
  auto index = MonomialIndex::get(t.dim(), m, m);
  Subspace acc(index->size());
  for (const auto& mu : partitions_of(m, t.rank()))
    if (mu.contains(lambda)) acc = Subspace::sum(acc, ktype_space(t, mu)->space().space());
  return PolySubspace(index, std::move(acc));
}

TheoremIResult theorem_i_check(const JordanTriple& t, const Partition& lambda, unsigned n) {
  TheoremIResult res;
  auto ideal = ideal_truncation(t, lambda, n);
  for (unsigned m = lambda.size(); m <= n; ++m) {
    TheoremIRow row{m, ideal->piece(m).dim(), {}, false};
    for (const auto& mu : partitions_of(m, t.rank()))
      if (mu.contains(lambda)) row.types.push_back({mu, ktype_space(t, mu)->dim()});
    row.equal = ideal->piece(m) == ktype_sum_above(t, lambda, m);
    if (!row.equal && res.ok) {
      res.ok = false;
      res.first_failure = m;
    }
    res.rows.push_back(std::move(row));
  }
  return res;
}

ContainmentResult containment_check(const JordanTriple& t, const Partition& lambda, const Partition& mu, unsigned n) {
  unsigned top = std::max({n, lambda.size(), mu.size()});
  auto jl = ideal_truncation(t, lambda, top);
  auto jm = ideal_truncation(t, mu, top);
  bool contained = true;
  for (unsigned m = 0; m <= top && contained; ++m) contained = jl->piece(m).contains(jm->piece(m));
  return {contained, mu.contains(lambda)};
}

IntersectionResult intersection_check(const JordanTriple& t, const Partition& lambda, unsigned n) {
  IntersectionResult res;
  res.rectangles = rectangular_decomposition(lambda);
  auto jl = ideal_truncation(t, lambda, std::max(n, lambda.size()));
  std::vector<IdealPtr> rects;
  for (const auto& [v, l] : res.rectangles) rects.push_back(ideal_truncation(t, rectangle(v, l), std::max(n, v * static_cast<unsigned>(l))));
  for (unsigned m = 0; m <= n; ++m) {
    auto index = MonomialIndex::get(t.dim(), m, m);
    PolySubspace rhs = PolySubspace::full(index);
    for (const auto& r : rects) rhs = PolySubspace::intersect(rhs, r->piece(m));
    const PolySubspace& lhs = jl->piece(m);
    IntersectionRow row{m, lhs.dim(), rhs.dim(), lhs == rhs};
    res.ok = res.ok && row.equal;
    res.rows.push_back(row);
  }
  return res;
}

bool gradedness_check(const JordanTriple& t, const IdealTruncation& ideal) {
  const std::size_t d = t.dim();
  for (unsigned m = 0; m < ideal.degree(); ++m)
    for (const auto& q : ideal.piece(m).basis())
      for (unsigned i = 0; i < d; ++i)
        if (!ideal.piece(m + 1).contains(q * Poly::variable(d, i))) return false;
  return true;
}

VanishingResult kepler_vanishing_check(const JordanTriple& t, unsigned m, unsigned n, Rng& rng,
                                       unsigned points_per_rank) {
  if (m < 1 || m > t.rank()) throw InvalidArgument("kepler_vanishing_check: need 1 <= m <= rank");
  VanishingResult res;
  auto ideal = ideal_truncation(t, rectangle(1, m), std::max(n, m));
  auto basis = ideal->basis_upto(n);
  std::vector<Vec> points;
  for (unsigned l = 0; l < m; ++l)
    for (unsigned k = 0; k < points_per_rank; ++k) {
      Vec z = random_point_of_rank(t, l, rng);
      points.push_back(z);
      ExactScalar small(Rational(1, 3));
      for (int attempt = 0; attempt < 10; ++attempt) {
        Vec x = vec_scale(small, rng.vec(t.dim())), y = vec_scale(small, rng.vec(t.dim()));
        ExactMatrix b = bergman(t, x, y);
        if (b.rank() == t.dim()) {
          points.push_back(b.apply(z));
          break;
        }
      }
    }
  for (const auto& z : points) {
    if (rank_of(t, z) >= m) throw InvariantViolation("kepler_vanishing_check: sample point has rank >= m");
    ++res.points;
    for (const auto& p : basis) {
      ++res.evaluations;
      if (!p.eval(z).is_zero()) res.ok = false;
    }
  }
  return res;
}

}  // namespace jtk
