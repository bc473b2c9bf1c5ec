#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "jtk/exact/matrix.hpp"
#include "jtk/exact/subspace.hpp"
#include "jtk/poly/fock.hpp"
#include "jtk/poly/poly.hpp"

namespace jtk {

enum class Family { matrix, symmetric, antisymmetric, spin, zero, generic };

std::string family_name(Family f);

/// Shape parameters: matrix uses (r, s); symmetric and antisymmetric use n; spin uses n as d.
struct TripleParams {
  Family family = Family::matrix;
  unsigned r = 0;
  unsigned s = 0;
  unsigned n = 0;
};

class JordanTriple;
using TriplePtr = std::shared_ptr<const JordanTriple>;

/// Finite-dimensional hermitian Jordan triple in a fixed coordinate basis b_0..b_{d-1}.
///
/// Coordinates are such that conjugation is coordinatewise. The product
/// {u v* w} is stored as its structure tensor on basis triples. The metric is
/// normalized so that the standard frame is orthonormal.
class JordanTriple {
 public:
  Family family() const noexcept { return params_.family; }
  const TripleParams& params() const noexcept { return params_; }
  const std::string& descriptor() const noexcept { return descriptor_; }
  std::size_t dim() const noexcept { return dim_; }
  unsigned rank() const noexcept { return rank_; }
  unsigned a() const noexcept { return a_; }
  unsigned b() const noexcept { return b_; }
  bool is_tube() const noexcept { return b_ == 0; }
  /// 2 + a(r-1) + b.
  unsigned genus() const noexcept { return 2 + a_ * (rank_ > 0 ? rank_ - 1 : 0) + b_; }

  /// (b_i | b_j).
  const ExactMatrix& metric() const noexcept { return metric_; }
  const FockSpace& fock() const noexcept { return *fock_; }
  const std::shared_ptr<const FockSpace>& fock_ptr() const noexcept { return fock_; }
  /// {b_i b_j* b_k}.
  const SparseVec& tensor(std::size_t i, std::size_t j, std::size_t k) const {
    return tensor_[(i * dim_ + j) * dim_ + k];
  }
  const std::vector<std::string>& basis_names() const noexcept { return names_; }
  /// Standard frame e_1..e_r.
  const std::vector<Vec>& frame() const noexcept { return frame_; }
  /// e_1 + ... + e_l.
  Vec frame_sum(unsigned l) const;

  /// N_m as a polynomial in the coordinates, 1 <= m <= r.
  const Poly& minor_poly(unsigned m) const;

  /// Matrix realization for matrix, symmetric and antisymmetric families.
  bool has_matrix_form() const noexcept;
  ExactMatrix to_matrix(std::span<const ExactScalar> z) const;
  Vec from_matrix(const ExactMatrix& m) const;

  /// Builds a triple from a family description. `checked` enforces the public
  /// parameter ranges (matrix r <= s, antisymmetric n even >= 4, spin d >= 3);
  /// sub-triples met along frame chains use checked = false.
  static TriplePtr make(const TripleParams& p, bool checked = true);
  /// "matrix:2x3", "sym:3", "asym:4", "spin:4" (also "zero").
  static TriplePtr parse(std::string_view descriptor);
  /// Re-checks the triple identities (symmetry, metric, Jordan identity on all
  /// basis quadruples, frame, minors); throws InvariantViolation naming the
  /// identity that fails.
  void verify() const;

  /// Sub-triple on span(basis) with the restricted product and metric.
  static TriplePtr restrict_to(const JordanTriple& t, const std::vector<Vec>& basis);

 private:
  JordanTriple() = default;
  void build_tensor();
  void build_minors();

  TripleParams params_;
  std::string descriptor_;
  std::size_t dim_ = 0;
  unsigned rank_ = 0;
  unsigned a_ = 0;
  unsigned b_ = 0;
  ExactMatrix metric_;
  std::shared_ptr<const FockSpace> fock_;
  std::vector<SparseVec> tensor_;
  std::vector<std::string> names_;
  std::vector<Vec> frame_;
  std::vector<Poly> minors_;
  // Matrix-type families: coordinate k sits at (row_[k], col_[k]) with a sign
  // for the mirrored entry (0 for none, +1 symmetric, -1 antisymmetric).
  std::size_t mrows_ = 0;
  std::size_t mcols_ = 0;
  std::vector<std::size_t> row_;
  std::vector<std::size_t> col_;
  int mirror_ = 0;
};

TriplePtr make_triple(Family family, unsigned p1, unsigned p2 = 0);

}  // namespace jtk
