#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "jtk/exact/matrix.hpp"
#include "jtk/poly/poly.hpp"

namespace jtk {

/// Gram matrix of the Fock inner product on homogeneous polynomials of one degree.
struct FockGram {
  MonomialIndexPtr index;        // monomials of exactly this degree
  std::vector<SparseVec> rows;   // rows[a] = (<z^a, z^b>)_b
  bool diagonal = false;
};

/// Fischer-Fock inner product for the pairing (z|w) = sum z_i g_ij conj(w_j):
/// the inner product, antilinear in the first argument, whose reproducing
/// kernel is exp((z|w)). Distinct degrees are orthogonal.
///
/// The degree-n block is G = (C^H)^{-1} where (z|w)^n / n! = sum C_ab z^a conj(w)^b.
/// For diagonal g this reduces to <z^a, z^a> = a! / g^a. Blocks are cached; the
/// cache is safe under concurrent use.
class FockSpace {
 public:
  explicit FockSpace(ExactMatrix metric);

  const ExactMatrix& metric() const noexcept { return g_; }
  std::size_t nvars() const noexcept { return g_.rows(); }
  bool diagonal() const noexcept { return diagonal_; }

  std::shared_ptr<const FockGram> gram(unsigned degree) const;
  ExactScalar inner(const Poly& p, const Poly& q) const;
  /// Gram matrix (<p_i, p_j>)_{ij} of a list of polynomials.
  ExactMatrix gram_of(const std::vector<Poly>& ps) const;

 private:
  std::shared_ptr<const FockGram> build(unsigned degree) const;
  Rational diag_weight(Monomial m) const;

  ExactMatrix g_;
  bool diagonal_ = false;
  std::vector<Rational> ginv_;
  mutable std::mutex mu_;
  mutable std::map<unsigned, std::shared_ptr<const FockGram>> cache_;
};

ExactScalar fock_inner(const Poly& p, const Poly& q, const FockSpace& space);

}  // namespace jtk
