#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "jtk/exact/random.hpp"
#include "jtk/jordan/triple.hpp"
#include "jtk/ktype/partition.hpp"
#include "jtk/poly/poly.hpp"

namespace jtk {

/// Graded pieces J^λ ∩ P^m for 0 <= m <= n (zero below |λ|).
class IdealTruncation {
 public:
  IdealTruncation(Partition lambda, unsigned n, std::vector<PolySubspace> pieces);

  const Partition& lambda() const noexcept { return lambda_; }
  unsigned degree() const noexcept { return n_; }
  /// Piece of degree m; m <= degree().
  const PolySubspace& piece(unsigned m) const;
  /// Basis of J^λ_{≤m}, all pieces up to m.
  std::vector<Poly> basis_upto(unsigned m) const;

 private:
  Partition lambda_;
  unsigned n_;
  std::vector<PolySubspace> pieces_;
};

using IdealPtr = std::shared_ptr<const IdealTruncation>;

/// Piece m = span{ z^γ p : |γ| = m − |λ|, p ∈ P^λ }, built degree by degree as
/// span{ z_i q : q in piece m−1 }. Cached per (triple, λ); a cached truncation of
/// higher degree is reused.
IdealPtr ideal_truncation(const JordanTriple& t, const Partition& lambda, unsigned n);

/// ⊕{ P^μ : μ ≥ λ, |μ| = m } as a subspace of the degree-m polynomials.
PolySubspace ktype_sum_above(const JordanTriple& t, const Partition& lambda, unsigned m);

struct TypeDim {
  Partition mu;
  std::size_t dim;
};

struct TheoremIRow {
  unsigned degree;
  std::size_t piece_dim;
  std::vector<TypeDim> types;  // μ ≥ λ with |μ| = degree
  bool equal;
};

struct TheoremIResult {
  bool ok = true;
  std::vector<TheoremIRow> rows;
  std::optional<unsigned> first_failure;
};

/// Checks J^λ ∩ P^m = ⊕_{μ≥λ,|μ|=m} P^μ for |λ| <= m <= n.
TheoremIResult theorem_i_check(const JordanTriple& t, const Partition& lambda, unsigned n);

struct ContainmentResult {
  bool truncations_contained;  // J^μ ∩ P^m ⊆ J^λ ∩ P^m for all m <= n
  bool order_predicate;        // μ ≥ λ
  bool agree() const noexcept { return truncations_contained == order_predicate; }
};

ContainmentResult containment_check(const JordanTriple& t, const Partition& lambda, const Partition& mu, unsigned n);

struct IntersectionRow {
  unsigned degree;
  std::size_t lhs_dim;
  std::size_t rhs_dim;
  bool equal;
};

struct IntersectionResult {
  bool ok = true;
  std::vector<std::pair<unsigned, std::size_t>> rectangles;
  std::vector<IntersectionRow> rows;
};

/// J^λ ∩ P^m = ∩_s J^{n_s^{(l_s)}} ∩ P^m for m <= n.
IntersectionResult intersection_check(const JordanTriple& t, const Partition& lambda, unsigned n);

/// True if z_i · (piece m) ⊆ piece m+1 for every coordinate and m < n.
bool gradedness_check(const JordanTriple& t, const IdealTruncation& ideal);

struct VanishingResult {
  bool ok = true;
  std::size_t points = 0;
  std::size_t evaluations = 0;
};

/// Every basis element of J^{1^{(m)}} up to degree n vanishes at sampled points
/// of rank < m: frame combinations Σ_{j<l} q_j e_j moved by structure-group
/// samples, and their images under invertible Bergman maps B(x,y).
VanishingResult kepler_vanishing_check(const JordanTriple& t, unsigned m, unsigned n, Rng& rng,
                                       unsigned points_per_rank = 3);

}  // namespace jtk
