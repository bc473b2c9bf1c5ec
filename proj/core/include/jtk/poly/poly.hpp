#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jtk/exact/matrix.hpp"
#include "jtk/exact/subspace.hpp"
#include "jtk/poly/monomial.hpp"

namespace jtk {

/// Polynomial in `nvars` variables z0..z{n-1} over Gaussian rationals.
/// Canonical: no zero coefficients are stored.
class Poly {
 public:
  using Terms = std::map<Monomial, ExactScalar>;

  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}
  static Poly constant(std::size_t nvars, const ExactScalar& c);
  static Poly variable(std::size_t nvars, unsigned i);
  static Poly monomial(std::size_t nvars, Monomial m, const ExactScalar& c = ExactScalar(1));
  /// Linear form sum_i coeffs[i] * z_i.
  static Poly linear(std::span<const ExactScalar> coeffs);

  std::size_t nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  ExactScalar coeff(Monomial m) const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  int min_degree() const;
  bool is_homogeneous() const;
  Poly homogeneous_part(unsigned deg) const;

  void add_term(Monomial m, const ExactScalar& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& q);
  Poly& operator-=(const Poly& q);
  friend Poly operator+(Poly p, const Poly& q) { return p += q; }
  friend Poly operator-(Poly p, const Poly& q) { return p -= q; }
  friend Poly operator*(const Poly& p, const Poly& q);
  friend Poly operator*(const ExactScalar& s, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  Poly pow(unsigned n) const;

  ExactScalar eval(std::span<const ExactScalar> z) const;
  /// Coefficient-wise conjugate: z -> conj(p(conj z)).
  Poly conj_coeffs() const;
  Poly partial(unsigned i) const;

  /// z -> p(M z) for square M of size nvars.
  Poly compose_linear(const ExactMatrix& m) const;
  /// w -> p(c + M w); M is nvars x k, result has k variables.
  Poly compose_affine(const ExactMatrix& m, std::span<const ExactScalar> c) const;
  /// (A^δ p)(z) = p'(z) A z.
  Poly derive(const ExactMatrix& a) const;

  /// "(3/2+1/2*i)*z0^2*z3 + ..." in descending degree.
  std::string str() const;
  static Poly parse(std::string_view text, std::size_t nvars);

 private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

/// Normal projection: w -> p(c + sum_k w_k b_k) for the given basis vectors b_k.
Poly normal_project(const Poly& p, std::span<const ExactScalar> c, const std::vector<Vec>& w_basis);

/// Coordinates of p in a monomial enumeration; throws when a term is not enumerated.
SparseVec to_coords(const Poly& p, const MonomialIndex& index);
Poly from_coords(const SparseVec& v, const MonomialIndex& index);

/// Subspace of polynomials in the coordinate enumeration of a MonomialIndex.
class PolySubspace {
 public:
  PolySubspace() = default;
  PolySubspace(MonomialIndexPtr index, Subspace space);
  static PolySubspace span(const std::vector<Poly>& polys, MonomialIndexPtr index);
  /// All polynomials whose terms lie in the index.
  static PolySubspace full(MonomialIndexPtr index);

  const MonomialIndexPtr& index() const noexcept { return index_; }
  const Subspace& space() const noexcept { return space_; }
  std::size_t dim() const noexcept { return space_.dim(); }
  bool contains(const Poly& p) const;
  bool contains(const PolySubspace& other) const;
  std::vector<Poly> basis() const;

  friend bool operator==(const PolySubspace& a, const PolySubspace& b);
  friend bool operator!=(const PolySubspace& a, const PolySubspace& b) { return !(a == b); }
  static PolySubspace sum(const PolySubspace& a, const PolySubspace& b);
  static PolySubspace intersect(const PolySubspace& a, const PolySubspace& b);

 private:
  MonomialIndexPtr index_;
  Subspace space_;
};

}  // namespace jtk
