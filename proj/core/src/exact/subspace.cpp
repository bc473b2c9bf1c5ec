#include "jtk/exact/subspace.hpp"

#include <algorithm>
#include <numeric>

#include "jtk/error.hpp"

namespace jtk {
namespace {

// Dense scratch row, kept all-zero between uses.
std::vector<ExactScalar>& scratch(std::size_t n) {
  thread_local std::vector<ExactScalar> buf;
  if (buf.size() < n) buf.resize(n);
  return buf;
}

SparseVec drain(std::vector<ExactScalar>& buf, std::uint32_t lo, std::uint32_t hi) {
  SparseVec out;
  for (std::uint32_t j = lo; j <= hi; ++j) {
    if (!buf[j].is_zero()) {
      out.emplace_back(j, std::move(buf[j]));
      buf[j] = ExactScalar();
    }
  }
  return out;
}

void check_sparse(const SparseVec& v, std::size_t ambient) {
  if (!v.empty() && v.back().first >= ambient) throw DimensionMismatch("vector index outside ambient space");
}

}  // namespace

SparseVec to_sparse(std::span<const ExactScalar> v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  }
  return out;
}

Vec to_dense(const SparseVec& v, std::size_t n) {
  Vec out(n);
  for (const auto& [i, x] : v) out.at(i) = x;
  return out;
}

SparseVec sparse_axpy(const SparseVec& a, const ExactScalar& s, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      ExactScalar x = s * b[j].second;
      if (!x.is_zero()) out.emplace_back(b[j].first, std::move(x));
      ++j;
    } else {
      ExactScalar x = a[i].second + s * b[j].second;
      if (!x.is_zero()) out.emplace_back(a[i].first, std::move(x));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec sparse_scale(const ExactScalar& s, const SparseVec& a) {
  if (s.is_zero()) return {};
  SparseVec out;
  out.reserve(a.size());
  for (const auto& [i, x] : a) out.emplace_back(i, s * x);
  return out;
}

SpanBuilder::SpanBuilder(std::size_t ambient) : ambient_(ambient), row_of_pivot_(ambient, -1) {}

SparseVec SpanBuilder::reduce(const SparseVec& v) const {
  if (v.empty()) return {};
  check_sparse(v, ambient_);
  auto& buf = scratch(ambient_);
  std::uint32_t lo = v.front().first;
  std::uint32_t hi = v.back().first;
  for (const auto& [i, x] : v) buf[i] = x;
  for (std::uint32_t j = lo; j <= hi; ++j) {
    if (buf[j].is_zero()) continue;
    const std::int32_t r = row_of_pivot_[j];
    if (r < 0) continue;
    const ExactScalar f = buf[j];
    const SparseVec& row = rows_[static_cast<std::size_t>(r)];
    for (const auto& [c, x] : row) buf[c] -= f * x;
    hi = std::max(hi, row.back().first);
  }
  return drain(buf, lo, hi);
}

bool SpanBuilder::insert(const SparseVec& v) {
  SparseVec rem = reduce(v);
  if (rem.empty()) return false;
  const ExactScalar inv = rem.front().second.inverse();
  if (!inv.is_one()) {
    for (auto& e : rem) e.second = e.second * inv;
  }
  row_of_pivot_[rem.front().first] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(std::move(rem));
  return true;
}

Subspace SpanBuilder::finish() const {
  std::vector<SparseVec> rows = rows_;
  std::sort(rows.begin(), rows.end(),
            [](const SparseVec& a, const SparseVec& b) { return a.front().first < b.front().first; });
  // Back-substitution: clear each pivot column from the rows above it.
  for (std::size_t i = rows.size(); i-- > 0;) {
    const std::uint32_t p = rows[i].front().first;
    for (std::size_t k = 0; k < i; ++k) {
      auto it = std::lower_bound(rows[k].begin(), rows[k].end(), p,
                                 [](const auto& e, std::uint32_t idx) { return e.first < idx; });
      if (it == rows[k].end() || it->first != p) continue;
      ExactScalar f = -it->second;
      rows[k] = sparse_axpy(rows[k], f, rows[i]);
    }
  }
  Subspace s(ambient_);
  s.row_of_pivot_.assign(ambient_, -1);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    s.pivots_.push_back(rows[i].front().first);
    s.row_of_pivot_[rows[i].front().first] = static_cast<std::int32_t>(i);
  }
  s.rows_ = std::move(rows);
  return s;
}

Subspace Subspace::span(const std::vector<Vec>& vectors, std::size_t ambient) {
  SpanBuilder b(ambient);
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw DimensionMismatch("span: vector length differs from ambient dimension");
    b.insert(to_sparse(v));
  }
  return b.finish();
}

Subspace Subspace::span(const std::vector<SparseVec>& vectors, std::size_t ambient) {
  SpanBuilder b(ambient);
  for (const auto& v : vectors) b.insert(v);
  return b.finish();
}

Subspace Subspace::full(std::size_t ambient) {
  SpanBuilder b(ambient);
  for (std::size_t i = 0; i < ambient; ++i) b.insert(SparseVec{{static_cast<std::uint32_t>(i), ExactScalar(1)}});
  return b.finish();
}

ExactMatrix Subspace::basis_matrix() const {
  ExactMatrix m(rows_.size(), ambient_);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (const auto& [j, x] : rows_[i]) m(i, j) = x;
  return m;
}

SparseVec Subspace::reduce(const SparseVec& v) const {
  if (v.empty()) return {};
  check_sparse(v, ambient_);
  if (rows_.empty()) return v;
  auto& buf = scratch(ambient_);
  std::uint32_t lo = v.front().first;
  std::uint32_t hi = v.back().first;
  for (const auto& [i, x] : v) buf[i] = x;
  // In reduced echelon form only the original pivot entries need clearing.
  for (const auto& [i, x] : v) {
    const std::int32_t r = row_of_pivot_[i];
    if (r < 0) continue;
    const SparseVec& row = rows_[static_cast<std::size_t>(r)];
    for (const auto& [c, y] : row) buf[c] -= x * y;
    hi = std::max(hi, row.back().first);
  }
  return drain(buf, lo, hi);
}

bool Subspace::contains(std::span<const ExactScalar> v) const {
  if (v.size() != ambient_) throw DimensionMismatch("contains: vector length differs from ambient dimension");
  return contains(to_sparse(v));
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("contains: ambient dimension mismatch");
  if (other.dim() > dim()) return false;
  for (const auto& r : other.rows_) {
    if (!contains(r)) return false;
  }
  return true;
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
}

Subspace Subspace::sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw DimensionMismatch("sum: ambient dimension mismatch");
  SpanBuilder sb(a.ambient_);
  for (const auto& r : a.rows_) sb.insert(r);
  for (const auto& r : b.rows_) sb.insert(r);
  return sb.finish();
}

Subspace Subspace::intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw DimensionMismatch("intersect: ambient dimension mismatch");
  const std::size_t n = a.ambient_;
  if (a.is_zero() || b.is_zero()) return Subspace(n);
  if (a.contains(b)) return b;
  if (b.contains(a)) return a;
  // Zassenhaus: echelonize rows [a | a] and [b | 0]; rows with zero left half
  // carry a basis of the intersection in their right half.
  const auto shift = static_cast<std::uint32_t>(n);
  SpanBuilder sb(2 * n);
  for (const auto& r : a.rows_) {
    SparseVec w = r;
    for (const auto& [j, x] : r) w.emplace_back(j + shift, x);
    sb.insert(w);
  }
  for (const auto& r : b.rows_) sb.insert(r);
  std::vector<SparseVec> inter;
  for (const auto& r : sb.rows()) {
    if (r.front().first < shift) continue;
    SparseVec w;
    w.reserve(r.size());
    for (const auto& [j, x] : r) w.emplace_back(j - shift, x);
    inter.push_back(std::move(w));
  }
  return span(inter, n);
}

std::size_t Subspace::quotient_dim(const Subspace& a, const Subspace& b) {
  return a.dim() - intersect(a, b).dim();
}

}  // namespace jtk
