#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "jtk/exact/random.hpp"
#include "jtk/jordan/ops.hpp"

namespace jtk {

struct IdentityCheck {
  bool ok = true;
  std::size_t checked = 0;
  std::optional<std::string> failure;

  void fail(std::string what) {
    if (ok) failure = std::move(what);
    ok = false;
  }
};

/// (x|y) in the triple metric.
ExactScalar inner(const JordanTriple& t, CVec x, CVec y);

/// Triple identities via JordanTriple::verify().
IdentityCheck axioms_check(const JordanTriple& t);

/// P2 + P1 + P0 = I and {E_i E_j* E_k} ⊆ E_{i−j+k} (zero outside 0..2) on
/// Peirce basis vectors for the tripotent c.
IdentityCheck peirce_rules_check(const JordanTriple& t, CVec c);

/// Δ_m(z) = Δ_l(z)·Δ_{m−l}^W(ω(z)) for l < m <= r at `points` random z with an
/// invertible Peirce 2-component along the standard chain.
IdentityCheck compression_check(const TriplePtr& t, unsigned l, unsigned points, Rng& rng);

/// Δ'(z)v = Δ(z)·(v | Q_e(z^{-1})) at `points` random invertible z. Tube type only.
IdentityCheck cramer_check(const JordanTriple& t, unsigned points, Rng& rng);

}  // namespace jtk
