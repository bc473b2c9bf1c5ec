#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>

#include "jtk/poly/poly.hpp"

namespace jtk {

/// Finite sum  sum c_{ab} z^a conj(w)^b  in nvars holomorphic and nvars
/// anti-holomorphic variables.
class SesquiPoly {
 public:
  using Key = std::pair<Monomial, Monomial>;
  using Terms = std::map<Key, ExactScalar>;

  SesquiPoly() = default;
  explicit SesquiPoly(std::size_t nvars) : nvars_(nvars) {}
  static SesquiPoly constant(std::size_t nvars, const ExactScalar& c);
  /// p(z) * conj(q(w)).
  static SesquiPoly outer(const Poly& p, const Poly& q);
  /// (z|w) = sum_ij z_i g_ij conj(w_j).
  static SesquiPoly pairing(const ExactMatrix& g);

  std::size_t nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  ExactScalar coeff(Monomial a, Monomial b) const;
  void add_term(Monomial a, Monomial b, const ExactScalar& c);

  SesquiPoly& operator+=(const SesquiPoly& q);
  SesquiPoly& operator-=(const SesquiPoly& q);
  friend SesquiPoly operator+(SesquiPoly p, const SesquiPoly& q) { return p += q; }
  friend SesquiPoly operator-(SesquiPoly p, const SesquiPoly& q) { return p -= q; }
  friend SesquiPoly operator*(const ExactScalar& s, const SesquiPoly& p);
  friend bool operator==(const SesquiPoly& a, const SesquiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const SesquiPoly& a, const SesquiPoly& b) { return !(a == b); }

  /// Product with terms of holomorphic degree above `max_deg` dropped.
  static SesquiPoly mul_truncated(const SesquiPoly& p, const SesquiPoly& q, unsigned max_deg);
  SesquiPoly truncate(unsigned max_deg) const;
  /// Terms of holomorphic degree exactly `deg`.
  SesquiPoly holomorphic_part(unsigned deg) const;

  ExactScalar eval(std::span<const ExactScalar> z, std::span<const ExactScalar> w) const;
  /// z -> K(z, w) for fixed w.
  Poly at_second(std::span<const ExactScalar> w) const;
  /// c_{ab} = conj(c_{ba}) for all terms.
  bool is_hermitian() const;

  std::string str() const;

 private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

}  // namespace jtk
