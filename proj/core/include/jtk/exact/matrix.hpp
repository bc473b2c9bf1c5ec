#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jtk/exact/scalar.hpp"

namespace jtk {

using Vec = std::vector<ExactScalar>;

/// Dense row-major matrix over Gaussian rationals.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static ExactMatrix identity(std::size_t n);
  static ExactMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static ExactMatrix from_columns(const std::vector<Vec>& cols, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  ExactScalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const ExactScalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec column(std::size_t j) const;
  void set_column(std::size_t j, std::span<const ExactScalar> v);

  bool is_zero() const;
  ExactMatrix transpose() const;
  ExactMatrix conj_transpose() const;
  ExactMatrix conj() const;

  /// Matrix-vector product A v.
  Vec apply(std::span<const ExactScalar> v) const;

  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const ExactScalar& s, const ExactMatrix& a);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

  /// Rank by fraction-free (Bareiss) elimination on the denominator-cleared matrix.
  std::size_t rank() const;
  /// Reduced row-echelon form; `pivots` receives the pivot columns.
  ExactMatrix rref(std::vector<std::size_t>* pivots = nullptr) const;
  /// Basis of {x : A x = 0}, one vector per free column.
  std::vector<Vec> nullspace() const;
  /// Some solution of A x = b, or nothing when the system is inconsistent.
  std::optional<Vec> solve(std::span<const ExactScalar> b) const;
  ExactMatrix inverse() const;  // throws InvalidArgument when singular
  ExactScalar determinant() const;

  ExactMatrix permute_columns(std::span<const std::size_t> perm) const;
  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ExactScalar> data_;
};

// Small vector helpers.
Vec vec_add(std::span<const ExactScalar> a, std::span<const ExactScalar> b);
Vec vec_sub(std::span<const ExactScalar> a, std::span<const ExactScalar> b);
Vec vec_scale(const ExactScalar& s, std::span<const ExactScalar> a);
Vec vec_conj(std::span<const ExactScalar> a);
bool vec_is_zero(std::span<const ExactScalar> a);
Vec unit_vector(std::size_t n, std::size_t i);
std::string vec_str(std::span<const ExactScalar> a);

}  // namespace jtk
