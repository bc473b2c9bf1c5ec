#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "jtk/jordan/triple.hpp"
#include "jtk/ktype/partition.hpp"
#include "jtk/poly/poly.hpp"
#include "jtk/poly/sesqui.hpp"

namespace jtk {

/// The K-type P_E^λ inside the homogeneous polynomials of degree |λ|.
class KTypeSpace {
 public:
  KTypeSpace(const JordanTriple& t, Partition lambda, PolySubspace space, std::vector<Poly> basis, unsigned rounds);

  const Partition& lambda() const noexcept { return lambda_; }
  const PolySubspace& space() const noexcept { return space_; }
  /// Closure basis, starting with N^λ.
  const std::vector<Poly>& basis() const noexcept { return basis_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  /// Number of closure rounds until the span stopped growing.
  unsigned rounds() const noexcept { return rounds_; }
  /// Fock Gram matrix of basis(), computed on first use.
  const ExactMatrix& gram() const;

 private:
  std::shared_ptr<const FockSpace> fock_;
  Partition lambda_;
  PolySubspace space_;
  std::vector<Poly> basis_;
  unsigned rounds_;
  mutable std::once_flag gram_once_;
  mutable ExactMatrix gram_;
};

using KTypePtr = std::shared_ptr<const KTypeSpace>;

/// Independent subset of the operators b_i□b_j* on E.
std::vector<ExactMatrix> box_operator_basis(const JordanTriple& t);

/// Smallest space containing N^λ and stable under derive(·, b_i□b_j*).
/// Cached per (triple descriptor, λ) for family triples.
KTypePtr ktype_space(const JordanTriple& t, const Partition& lambda);

/// Fock-orthogonal projection of a homogeneous f of degree |λ| onto P_E^λ.
Poly ktype_project(const JordanTriple& t, const Poly& f, const Partition& lambda);

struct Decomposition {
  std::vector<std::pair<Partition, Poly>> components;
  Poly residual;
};

/// Splits f into its K-type components, degree by degree.
Decomposition decompose(const JordanTriple& t, const Poly& f);

/// E^λ(z,ζ) = Σ p_i(z) (G^{-1})_ij conj(p_j(ζ)).
SesquiPoly fock_kernel(const JordanTriple& t, const Partition& lambda);

/// Φ^λ = E^λ(·,e)/E^λ(e,e); tube type only.
Poly spherical(const JordanTriple& t, const Partition& lambda);

struct DimsEntry {
  Partition lambda;
  std::size_t dim;
};

/// (λ, d_λ) for |λ| = n; throws InvariantViolation when the K-types do not
/// fill the degree-n space.
std::vector<DimsEntry> dims_report(const JordanTriple& t, unsigned n);

/// Number of monomials of degree n in d variables.
std::size_t homogeneous_dim(std::size_t d, unsigned n);

}  // namespace jtk
