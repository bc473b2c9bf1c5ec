#include "jtk/exact/matrix.hpp"

#include <utility>

#include "jtk/error.hpp"

namespace jtk {

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ExactScalar(1);
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  ExactMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatch("from_rows: row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

ExactMatrix ExactMatrix::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
  ExactMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
  return m;
}

Vec ExactMatrix::row(std::size_t i) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec ExactMatrix::column(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void ExactMatrix::set_column(std::size_t j, std::span<const ExactScalar> v) {
  if (v.size() != rows_) throw DimensionMismatch("set_column: length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ExactMatrix ExactMatrix::conj_transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j).conj();
  return t;
}

ExactMatrix ExactMatrix::conj() const {
  ExactMatrix t(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) t.data_[k] = data_[k].conj();
  return t;
}

Vec ExactMatrix::apply(std::span<const ExactScalar> v) const {
  if (v.size() != cols_) throw DimensionMismatch("apply: vector length mismatch");
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    ExactScalar acc;
    for (std::size_t j = 0; j < cols_; ++j) {
      const ExactScalar& a = (*this)(i, j);
      if (a.is_zero() || v[j].is_zero()) continue;
      acc += a * v[j];
    }
    out[i] = std::move(acc);
  }
  return out;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix +: shape mismatch");
  ExactMatrix c(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = a.data_[k] + b.data_[k];
  return c;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix -: shape mismatch");
  ExactMatrix c(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = a.data_[k] - b.data_[k];
  return c;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix *: inner dimension mismatch");
  ExactMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const ExactScalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const ExactScalar& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        c(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

ExactMatrix operator*(const ExactScalar& s, const ExactMatrix& a) {
  ExactMatrix c(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = s * a.data_[k];
  return c;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::size_t ExactMatrix::rank() const {
  // Clear denominators row by row so that every entry is a Gaussian integer,
  // then run Bareiss elimination; every division below is exact in Z[i].
  ExactMatrix m = *this;
  for (std::size_t i = 0; i < rows_; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < cols_; ++j) {
      const ExactScalar& x = m(i, j);
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.re().denominator().get_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.im().denominator().get_mpz_t());
    }
    if (l != 1) {
      ExactScalar s{Rational(mpq_class(l))};
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = m(i, j) * s;
    }
  }
  ExactScalar prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && m(p, c).is_zero()) ++p;
    if (p == rows_) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m(p, j), m(r, j));
    }
    const ExactScalar piv = m(r, c);
    for (std::size_t i = r + 1; i < rows_; ++i) {
      const ExactScalar lead = m(i, c);
      for (std::size_t j = c + 1; j < cols_; ++j) {
        m(i, j) = (piv * m(i, j) - lead * m(r, j)) / prev;
      }
      m(i, c) = ExactScalar();
    }
    prev = piv;
    ++r;
  }
  return r;
}

ExactMatrix ExactMatrix::rref(std::vector<std::size_t>* pivots) const {
  ExactMatrix m = *this;
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && m(p, c).is_zero()) ++p;
    if (p == rows_) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m(p, j), m(r, j));
    }
    ExactScalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < cols_; ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      ExactScalar f = m(i, c);
      for (std::size_t j = c; j < cols_; ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
      }
    }
    piv.push_back(c);
    ++r;
  }
  if (pivots) *pivots = std::move(piv);
  return m;
}

std::vector<Vec> ExactMatrix::nullspace() const {
  std::vector<std::size_t> piv;
  ExactMatrix r = rref(&piv);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<Vec> out;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    Vec x(cols_);
    x[f] = ExactScalar(1);
    for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = -r(k, f);
    out.push_back(std::move(x));
  }
  return out;
}

std::optional<Vec> ExactMatrix::solve(std::span<const ExactScalar> b) const {
  if (b.size() != rows_) throw DimensionMismatch("solve: rhs length mismatch");
  ExactMatrix aug(rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_) = b[i];
  }
  std::vector<std::size_t> piv;
  ExactMatrix r = aug.rref(&piv);
  if (!piv.empty() && piv.back() == cols_) return std::nullopt;
  Vec x(cols_);
  for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = r(k, cols_);
  return x;
}

ExactMatrix ExactMatrix::inverse() const {
  if (!is_square()) throw DimensionMismatch("inverse: matrix not square");
  const std::size_t n = rows_;
  ExactMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = ExactScalar(1);
  }
  std::vector<std::size_t> piv;
  ExactMatrix r = aug.rref(&piv);
  if (piv.size() < n || piv[n - 1] != n - 1) throw InvalidArgument("inverse: matrix is singular");
  ExactMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

ExactScalar ExactMatrix::determinant() const {
  if (!is_square()) throw DimensionMismatch("determinant: matrix not square");
  ExactMatrix m = *this;
  const std::size_t n = rows_;
  ExactScalar det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return ExactScalar();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    ExactScalar inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      ExactScalar f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

ExactMatrix ExactMatrix::permute_columns(std::span<const std::size_t> perm) const {
  if (perm.size() != cols_) throw DimensionMismatch("permute_columns: permutation size mismatch");
  ExactMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, perm[j]);
  return out;
}

std::string ExactMatrix::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    s += i ? "; " : "";
    for (std::size_t j = 0; j < cols_; ++j) {
      s += j ? ", " : "";
      s += (*this)(i, j).str();
    }
  }
  return s + "]";
}

Vec vec_add(std::span<const ExactScalar> a, std::span<const ExactScalar> b) {
  if (a.size() != b.size()) throw DimensionMismatch("vec_add: length mismatch");
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

Vec vec_sub(std::span<const ExactScalar> a, std::span<const ExactScalar> b) {
  if (a.size() != b.size()) throw DimensionMismatch("vec_sub: length mismatch");
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

Vec vec_scale(const ExactScalar& s, std::span<const ExactScalar> a) {
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = s * a[i];
  return c;
}

Vec vec_conj(std::span<const ExactScalar> a) {
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i].conj();
  return c;
}

bool vec_is_zero(std::span<const ExactScalar> a) {
  for (const auto& x : a) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vec unit_vector(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = ExactScalar(1);
  return v;
}

std::string vec_str(std::span<const ExactScalar> a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += i ? ", " : "";
    s += a[i].str();
  }
  return s + ")";
}

}  // namespace jtk
