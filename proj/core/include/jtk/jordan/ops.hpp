#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "jtk/exact/matrix.hpp"
#include "jtk/exact/random.hpp"
#include "jtk/exact/subspace.hpp"
#include "jtk/jordan/triple.hpp"

namespace jtk {

using CVec = std::span<const ExactScalar>;

/// {u v* w}.
Vec triple_product(const JordanTriple& t, CVec u, CVec v, CVec w);
/// u□v* as a matrix: z -> {u v* z}.
ExactMatrix box(const JordanTriple& t, CVec u, CVec v);
/// Q_x y = ½{x y* x}.
Vec Q(const JordanTriple& t, CVec x, CVec y);
/// Q_x is conjugate-linear; returns A with Q_x y = A·conj(y).
ExactMatrix Q_matrix(const JordanTriple& t, CVec x);
/// B(x,y) = I − x□y* + Q_x Q_y.
ExactMatrix bergman(const JordanTriple& t, CVec x, CVec y);

bool is_tripotent(const JordanTriple& t, CVec c);

struct PeirceDecomposition {
  Vec c;
  ExactMatrix P2;
  ExactMatrix P1;
  ExactMatrix P0;
  /// Basis of E⁰_c and the sub-triple it carries (null when not requested).
  std::vector<Vec> w_basis;
  TriplePtr w;

  /// Subspace E^k_c, k in {0,1,2}.
  Subspace space(int k) const;
};

/// Peirce projections of a tripotent. Verifies the projection identities and
/// the multiplication rules on basis vectors of the three spaces.
PeirceDecomposition peirce(const JordanTriple& t, CVec c, bool with_subtriple = true);

const std::vector<Vec>& standard_frame(const JordanTriple& t);

struct JointPeirce {
  std::vector<Vec> frame;
  /// Keyed by (i, j), 0 <= i <= j <= r; index 0 stands for "no frame element".
  std::map<std::pair<unsigned, unsigned>, Subspace> blocks;

  const Subspace& block(unsigned i, unsigned j) const;
};

JointPeirce joint_peirce(const JordanTriple& t, const std::vector<Vec>& frame);

unsigned rank_of(const JordanTriple& t, CVec z);

/// N_m(z); N_0 = 1.
ExactScalar minor(const JordanTriple& t, unsigned m, CVec z);
/// N^λ = Π N_m^{λ_m − λ_{m+1}} as a polynomial.
Poly conical_poly(const JordanTriple& t, std::span<const unsigned> lambda);
ExactScalar conical(const JordanTriple& t, std::span<const unsigned> lambda, CVec z);
/// Δ_e(z) = N_r(z).
ExactScalar determinant(const JordanTriple& t, CVec z);

/// P_z = Q_z Q_c as a linear map, c the unit of the Peirce 2-space.
ExactMatrix quadratic_rep(const JordanTriple& t, CVec z, CVec c);
ExactMatrix quadratic_rep(const JordanTriple& t, CVec z);
/// Inverse of u in the Peirce 2-space U of c: P_u^{-1} u computed inside U.
/// Throws InvalidArgument when u is not invertible in U.
Vec inverse_in(const JordanTriple& t, CVec c, CVec u);
/// z^{-1} with respect to the maximal tripotent e of the standard frame.
Vec inverse(const JordanTriple& t, CVec z);

/// ω(z) = w − Q_v(u^{−*}) with u = P2 z, v = P1 z, w = P0 z and u^{−*} = Q_c(u^{-1}).
/// Throws InvalidArgument ("z not in Omega") when u is singular in U.
Vec omega(const JordanTriple& t, const PeirceDecomposition& pd, CVec z);
Vec omega(const JordanTriple& t, CVec c, CVec z);

/// Peirce 0-space of e_1 + ... + e_l as a concrete triple of the same kind,
/// with embed mapping W-coordinates into E and carrying the frame
/// e_{l+1}..e_r onto W's standard frame.
struct ChainStratum {
  unsigned l = 0;
  Vec c;
  TriplePtr w;
  ExactMatrix embed;

  /// W-coordinates of a vector in E⁰_c.
  Vec to_w(CVec x) const;
};

/// Cached per (triple, l). Requires a family triple.
const ChainStratum& chain_stratum(const TriplePtr& t, unsigned l);

/// Random rational structure-preserving linear maps k of E (signed
/// permutations, 3-4-5 rotations, unit phases). For the matrix family the
/// column action is block-diagonal so that leading minors stay semi-invariant.
ExactMatrix random_k(const JordanTriple& t, Rng& rng);
/// True if k{uv*w} = {ku kv* kw} on all basis triples.
bool is_automorphism(const JordanTriple& t, const ExactMatrix& k);

/// Σ q_j e_j.
Vec frame_point(const JordanTriple& t, std::span<const Rational> q);
/// k·Σ_{j<l} q_j e_j with nonzero rational q_j and a random k.
Vec random_point_of_rank(const JordanTriple& t, unsigned l, Rng& rng);

}  // namespace jtk
