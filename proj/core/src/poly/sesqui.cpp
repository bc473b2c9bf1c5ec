#include "jtk/poly/sesqui.hpp"

#include "jtk/error.hpp"

namespace jtk {

SesquiPoly SesquiPoly::constant(std::size_t nvars, const ExactScalar& c) {
  SesquiPoly s(nvars);
  s.add_term(0, 0, c);
  return s;
}

SesquiPoly SesquiPoly::outer(const Poly& p, const Poly& q) {
  if (p.nvars() != q.nvars()) throw DimensionMismatch("outer: nvars mismatch");
  SesquiPoly s(p.nvars());
  for (const auto& [a, ca] : p.terms())
    for (const auto& [b, cb] : q.terms()) s.add_term(a, b, ca * cb.conj());
  return s;
}

SesquiPoly SesquiPoly::pairing(const ExactMatrix& g) {
  if (!g.is_square()) throw DimensionMismatch("pairing: metric not square");
  SesquiPoly s(g.rows());
  for (unsigned i = 0; i < g.rows(); ++i)
    for (unsigned j = 0; j < g.cols(); ++j) s.add_term(mono::var(i), mono::var(j), g(i, j));
  return s;
}

ExactScalar SesquiPoly::coeff(Monomial a, Monomial b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? ExactScalar() : it->second;
}

void SesquiPoly::add_term(Monomial a, Monomial b, const ExactScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SesquiPoly& SesquiPoly::operator+=(const SesquiPoly& q) {
  if (q.nvars_ != nvars_) throw DimensionMismatch("sesqui +: nvars mismatch");
  for (const auto& [k, c] : q.terms_) add_term(k.first, k.second, c);
  return *this;
}

SesquiPoly& SesquiPoly::operator-=(const SesquiPoly& q) {
  if (q.nvars_ != nvars_) throw DimensionMismatch("sesqui -: nvars mismatch");
  for (const auto& [k, c] : q.terms_) add_term(k.first, k.second, -c);
  return *this;
}

SesquiPoly operator*(const ExactScalar& s, const SesquiPoly& p) {
  SesquiPoly r(p.nvars_);
  if (s.is_zero()) return r;
  for (const auto& [k, c] : p.terms_) r.terms_.emplace_hint(r.terms_.end(), k, s * c);
  return r;
}

SesquiPoly SesquiPoly::mul_truncated(const SesquiPoly& p, const SesquiPoly& q, unsigned max_deg) {
  if (p.nvars_ != q.nvars_) throw DimensionMismatch("sesqui *: nvars mismatch");
  SesquiPoly r(p.nvars_);
  for (const auto& [k1, c1] : p.terms_) {
    unsigned d1 = mono::degree(k1.first);
    if (d1 > max_deg) continue;
    for (const auto& [k2, c2] : q.terms_) {
      if (d1 + mono::degree(k2.first) > max_deg) continue;
      r.add_term(mono::mul(k1.first, k2.first), mono::mul(k1.second, k2.second), c1 * c2);
    }
  }
  return r;
}

SesquiPoly SesquiPoly::truncate(unsigned max_deg) const {
  SesquiPoly r(nvars_);
  for (const auto& [k, c] : terms_) {
    if (mono::degree(k.first) <= max_deg) r.terms_.emplace_hint(r.terms_.end(), k, c);
  }
  return r;
}

SesquiPoly SesquiPoly::holomorphic_part(unsigned deg) const {
  SesquiPoly r(nvars_);
  for (const auto& [k, c] : terms_) {
    if (mono::degree(k.first) == deg) r.terms_.emplace_hint(r.terms_.end(), k, c);
  }
  return r;
}

ExactScalar SesquiPoly::eval(std::span<const ExactScalar> z, std::span<const ExactScalar> w) const {
  return at_second(w).eval(z);
}

Poly SesquiPoly::at_second(std::span<const ExactScalar> w) const {
  if (w.size() != nvars_) throw DimensionMismatch("sesqui eval: point dimension mismatch");
  Vec wc = vec_conj(w);
  Poly out(nvars_);
  for (const auto& [k, c] : terms_) {
    Poly b = Poly::monomial(nvars_, k.second);
    out.add_term(k.first, c * b.eval(wc));
  }
  return out;
}

bool SesquiPoly::is_hermitian() const {
  for (const auto& [k, c] : terms_) {
    if (coeff(k.second, k.first) != c.conj()) return false;
  }
  return true;
}

std::string SesquiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) s += " + ";
    first = false;
    s += "(" + c.str() + ")";
    for (unsigned v = 0; v < nvars_; ++v) {
      unsigned e = mono::exp(k.first, v);
      if (e) s += "*z" + std::to_string(v) + (e > 1 ? "^" + std::to_string(e) : "");
    }
    for (unsigned v = 0; v < nvars_; ++v) {
      unsigned e = mono::exp(k.second, v);
      if (e) s += "*w" + std::to_string(v) + "~" + (e > 1 ? "^" + std::to_string(e) : "");
    }
  }
  return s;
}

}  // namespace jtk
