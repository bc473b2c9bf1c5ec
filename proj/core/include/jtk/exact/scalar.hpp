#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "jtk/exact/rational.hpp"

namespace jtk {

/// Gaussian rational re + im*i.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(std::int64_t re) : re_(re) {}         // NOLINT(google-explicit-constructor)
  ExactScalar(int re) : re_(static_cast<std::int64_t>(re)) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static ExactScalar i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const noexcept { return re_.is_one() && im_.is_zero(); }
  bool is_real() const noexcept { return im_.is_zero(); }

  ExactScalar conj() const { return {re_, -im_}; }
  /// |x|^2 = x * conj(x), always real.
  Rational norm2() const { return re_ * re_ + im_ * im_; }
  ExactScalar inverse() const;  // throws DivisionByZero

  ExactScalar operator-() const { return {-re_, -im_}; }
  friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b);
  ExactScalar& operator+=(const ExactScalar& b);
  ExactScalar& operator-=(const ExactScalar& b);
  ExactScalar& operator*=(const ExactScalar& b) { return *this = *this * b; }
  ExactScalar& operator/=(const ExactScalar& b) { return *this = *this / b; }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

  /// Canonical text: "3/2", "-i", "1/2+3/4*i", "-2*i".
  std::string str() const;
  /// Accepts "a/b+c/d*i" with optional parts; "i", "-i", "2i", "1/2i" also parse.
  static ExactScalar parse(std::string_view text);

 private:
  Rational re_;
  Rational im_;
};

/// Division that reports a zero divisor as an empty result instead of throwing.
std::optional<ExactScalar> try_div(const ExactScalar& a, const ExactScalar& b);

ExactScalar pow(const ExactScalar& x, unsigned n);

std::string to_string(const ExactScalar& x);

}  // namespace jtk
