#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jtk/exact/random.hpp"
#include "jtk/jordan/ops.hpp"
#include "jtk/ktype/partition.hpp"
#include "jtk/poly/poly.hpp"

namespace jtk {

/// (M_ζ)_{≤n} = span{ z^γ − ζ^γ : 1 <= |γ| <= n } inside the polynomials of degree <= n.
PolySubspace maximal_ideal_truncation(std::size_t nvars, CVec zeta, unsigned n);

struct FiberComputation {
  Partition lambda;
  Vec zeta;
  unsigned degree = 0;
  /// (m, dim J_{≤m} / (M_ζ J)_{≤m}) for |λ| <= m <= degree.
  std::vector<std::pair<unsigned, std::size_t>> dims;
  /// The last two dims agree.
  bool stabilized = false;
  std::size_t fiber_dim = 0;
  /// First m from which dims stay constant up to degree.
  unsigned stable_from = 0;
};

/// Brute-force fiber dimension of J^λ at ζ. Uses
/// (M_ζ J)_{≤m} = Σ_k (M_ζ)_{≤m−k}·(J ∩ P^k) = Σ_i (z_i − ζ_i)·J_{≤m−1}.
FiberComputation fiber(const JordanTriple& t, const Partition& lambda, CVec zeta, unsigned n);

struct Stratum {
  unsigned l = 0;
  Vec c;
  TriplePtr w;
  ExactMatrix embed;
  Partition lambda_star;
};

Stratum stratum(const TriplePtr& t, const Partition& lambda, unsigned l);

/// π_c f(w) = f(c + w) in the W-coordinates of the chain stratum.
Poly normal_projection(const TriplePtr& t, unsigned l, const Poly& f);
/// π_c^{λ*} f: the degree-|λ*| part of π_c f projected onto P_W^{λ*}.
Poly lowest_type_projection(const TriplePtr& t, const Partition& lambda, unsigned l, const Poly& f);

struct TheoremRResult {
  bool ok = true;
  Partition lambda_star;
  std::size_t checked = 0;
  /// On failure: the offending degree and K_W-type.
  std::optional<std::string> counterexample;
};

/// Every π_c f, f in the J^λ truncation basis up to degree n, lies in J_W^{λ*}.
TheoremRResult theorem_r_check(const TriplePtr& t, const Partition& lambda, unsigned l, unsigned n);

struct TheoremWResult {
  Partition lambda_star;
  std::size_t target_dim = 0;  // dim P_W^{λ*}
  std::size_t image_dim = 0;
  bool surjective = false;
  std::size_t kernel_checked = 0;
  bool kernel_contained = true;
  FiberComputation fiber;
  bool dims_match = false;

  bool ok() const noexcept { return surjective && kernel_contained && dims_match; }
};

TheoremWResult theorem_w_check(const TriplePtr& t, const Partition& lambda, unsigned l, unsigned n);

/// count points of rank l: e_1+...+e_l, then structure-group moves of Σ q_j e_j
/// and their images under invertible Bergman maps.
std::vector<Vec> stratum_points(const JordanTriple& t, unsigned l, unsigned count, Rng& rng);

struct HomogeneityResult {
  bool ok = true;
  std::vector<FiberComputation> fibers;
};

/// Fiber dims agree at all points; throws InvalidArgument if a point has rank != l.
HomogeneityResult stratum_homogeneity_check(const JordanTriple& t, const Partition& lambda, unsigned l,
                                            const std::vector<Vec>& points, unsigned n);

/// Whether the cross-section construction was compiled in.
bool cross_section_enabled() noexcept;

enum class CrossSectionStatus { ok, failed, sampling_exhausted, disabled };

struct CrossSectionResult {
  CrossSectionStatus status = CrossSectionStatus::disabled;
  Partition lambda_star;
  std::size_t basis_size = 0;
  std::size_t samples = 0;
  /// Λ_λ N_W^{λ*} = N^λ.
  bool conical_ok = false;
};

/// Λ_λ: P_W^{λ*} → P_E^λ. Samples k_i = B(x_i, y_i) with x_i, y_i ∈ W until the
/// translates N_W^{λ*}∘k_i|_W span P_W^{λ*}; then Λ_λ φ = N^{λ'}·Σ C_i N^{λ̂*}∘k_i
/// where φ = Σ C_i N_W^{λ*}∘k_i|_W.
class CrossSection {
 public:
  /// std::nullopt when sampling is exhausted before the translates span.
  static std::optional<CrossSection> build(const TriplePtr& t, const Partition& lambda, unsigned l, Rng& rng);

  const Partition& lambda_star() const noexcept { return lambda_star_; }
  std::size_t samples() const noexcept { return samples_; }
  /// Throws InvalidArgument when φ is not in P_W^{λ*}.
  Poly operator()(const Poly& phi) const;

 private:
  CrossSection() = default;
  Partition lambda_star_;
  std::size_t samples_ = 0;
  MonomialIndexPtr index_;
  ExactMatrix translates_;  // columns: coordinates of N_W^{λ*}∘k_i|_W
  std::vector<Poly> lifts_;  // N^{λ̂*}∘k_i
  Poly n_prime_;
};

/// Builds Λ_λ and checks π_c^{λ*}(Λ_λ φ) = φ and Λ_λ φ ∈ P_E^λ on a basis of
/// P_W^{λ*}, plus Λ_λ N_W^{λ*} = N^λ.
CrossSectionResult cross_section_check(const TriplePtr& t, const Partition& lambda, unsigned l, Rng& rng);

}  // namespace jtk
