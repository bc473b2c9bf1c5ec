#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "jtk/exact/matrix.hpp"

namespace jtk {

/// Sparse coordinate vector: (index, value) pairs, strictly increasing index, no zeros.
using SparseVec = std::vector<std::pair<std::uint32_t, ExactScalar>>;

SparseVec to_sparse(std::span<const ExactScalar> v);
Vec to_dense(const SparseVec& v, std::size_t n);
/// a + s*b
SparseVec sparse_axpy(const SparseVec& a, const ExactScalar& s, const SparseVec& b);
SparseVec sparse_scale(const ExactScalar& s, const SparseVec& a);

class Subspace;

/// Incremental semi-echelon basis. Not thread-safe; meant to be a local.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t ambient);

  /// Adds v; returns true when it was independent of the current span.
  bool insert(const SparseVec& v);
  bool insert(std::span<const ExactScalar> v) { return insert(to_sparse(v)); }
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  /// Remainder of v after elimination against the current rows.
  SparseVec reduce(const SparseVec& v) const;

  std::size_t dim() const noexcept { return rows_.size(); }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  /// Rows in insertion order, each with leading coefficient 1.
  const std::vector<SparseVec>& rows() const noexcept { return rows_; }

  Subspace finish() const;

 private:
  std::size_t ambient_;
  std::vector<SparseVec> rows_;
  std::vector<std::int32_t> row_of_pivot_;
};

/// Subspace of C^n stored as its reduced row-echelon basis (canonical form).
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient);
  static Subspace span(const std::vector<SparseVec>& vectors, std::size_t ambient);
  static Subspace full(std::size_t ambient);

  std::size_t dim() const noexcept { return rows_.size(); }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  bool is_zero() const noexcept { return rows_.empty(); }
  const std::vector<SparseVec>& basis() const noexcept { return rows_; }
  const std::vector<std::uint32_t>& pivots() const noexcept { return pivots_; }
  ExactMatrix basis_matrix() const;

  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  bool contains(std::span<const ExactScalar> v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b);
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  static Subspace sum(const Subspace& a, const Subspace& b);
  static Subspace intersect(const Subspace& a, const Subspace& b);
  /// dim(A) - dim(A ∩ B).
  static std::size_t quotient_dim(const Subspace& a, const Subspace& b);

 private:
  friend class SpanBuilder;
  std::size_t ambient_ = 0;
  std::vector<SparseVec> rows_;
  std::vector<std::uint32_t> pivots_;
  std::vector<std::int32_t> row_of_pivot_;
};

}  // namespace jtk
