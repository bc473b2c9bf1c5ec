#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "jtk/jordan/triple.hpp"
#include "jtk/ktype/partition.hpp"
#include "jtk/poly/sesqui.hpp"

namespace jtk {

struct DeltaKernel {
  TriplePtr triple;
  SesquiPoly kernel;
};

/// Δ(z,ζ): det(I − zζ*) for matrix and symmetric triples, its square root for
/// antisymmetric ones, 1 − (z|ζ) + N_2(z)·conj(N_2(ζ)) for spin factors.
/// Throws Unsupported for other families.
DeltaKernel delta_kernel(const TriplePtr& t);

/// Π_j (1 − q_j²), the value of Δ(ζ,ζ) at ζ = Σ q_j e_j.
Rational delta_on_frame(std::span<const Rational> q);

/// (x)_m = x(x+1)...(x+m−1).
Rational rising(const Rational& x, unsigned m);
/// (s)_λ = Π_j (s − (j−1)a/2)_{λ_j}.
Rational pochhammer(const Rational& s, const Partition& lambda, unsigned a);

struct PochhammerTable {
  Rational s;
  unsigned a = 0;
  std::map<Partition, Rational> entries;
};

/// (s)_λ for every λ with |λ| <= n and at most `rank` parts.
PochhammerTable pochhammer_table(const Rational& s, unsigned a, unsigned rank, unsigned n);

/// log(1 + u) truncated at holomorphic degree n; u must have no constant term.
SesquiPoly log1p_series(const SesquiPoly& u, unsigned n);
/// exp(v) truncated at holomorphic degree n; v must have no constant term.
SesquiPoly exp_series(const SesquiPoly& v, unsigned n);
/// Δ^{−s} = exp(−s·log(1 + (Δ − 1))) up to holomorphic degree n.
SesquiPoly delta_power_series(const DeltaKernel& delta, const Rational& s, unsigned n);

struct BinomialRow {
  unsigned degree;
  bool equal;
};

struct BinomialResult {
  Rational s;
  unsigned degree = 0;
  bool ok = true;
  std::vector<BinomialRow> rows;
  std::vector<std::pair<Partition, Rational>> coefficients;  // (s)_λ used
};

/// Compares Δ^{−s} with Σ_{|λ|<=n} (s)_λ E^λ degree by degree; n <= 4.
BinomialResult binomial_check(const TriplePtr& t, const Rational& s, unsigned n);

/// Π_{j≠i} (μ'_i − μ'_j + a/2)/(μ'_i − μ'_j) with μ'_k = μ_k − (a/2)(k−1); i is 0-based.
Rational pieri_coefficient(const std::vector<unsigned>& mu, unsigned i, unsigned a);

struct PieriTerm {
  Partition nu;  // μ + ε_i
  Rational expected;
  ExactScalar measured;  // projection of (z|e)Φ^μ onto P^ν, evaluated at e
  bool proportional;     // projection is a multiple of Φ^ν
  bool equal;
  bool positive;
};

struct PieriResult {
  Partition mu;
  bool ok = true;
  std::vector<PieriTerm> terms;
  /// (z|e)Φ^μ = Σ c_i Φ^{μ+ε_i} with no other component.
  bool exhaustive = false;
};

/// Tube type only; throws InvalidArgument otherwise.
PieriResult pieri_check(const TriplePtr& t, const Partition& mu);

struct WallachReport {
  unsigned a = 0, b = 0, r = 0;
  std::size_t d = 0;
  Rational continuous_bound;          // (a/2)(r−1)
  std::vector<Rational> discrete;     // ℓa/2, 0 <= ℓ <= r−1
  Rational weighted_bergman_bound;    // 1 + a(r−1) + b
  Rational bergman;                   // 2 + a(r−1) + b
  std::vector<std::pair<unsigned, Rational>> hardy;  // (ℓ, d/r + (r−ℓ)a/2), 1 <= ℓ <= r
};

WallachReport wallach_report(const JordanTriple& t);

}  // namespace jtk
