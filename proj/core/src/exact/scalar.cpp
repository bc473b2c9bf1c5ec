#include "jtk/exact/scalar.hpp"

#include <cctype>

#include "jtk/error.hpp"

namespace jtk {

ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
  if (a.im_.is_zero() && b.im_.is_zero()) return ExactScalar(a.re_ + b.re_);
  return {a.re_ + b.re_, a.im_ + b.im_};
}

ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) {
  if (a.im_.is_zero() && b.im_.is_zero()) return ExactScalar(a.re_ - b.re_);
  return {a.re_ - b.re_, a.im_ - b.im_};
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& b) {
  re_ += b.re_;
  if (!b.im_.is_zero()) im_ += b.im_;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& b) {
  re_ -= b.re_;
  if (!b.im_.is_zero()) im_ -= b.im_;
  return *this;
}

ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
  if (a.im_.is_zero()) {
    if (b.im_.is_zero()) return ExactScalar(a.re_ * b.re_);
    return {a.re_ * b.re_, a.re_ * b.im_};
  }
  if (b.im_.is_zero()) return {a.re_ * b.re_, a.im_ * b.re_};
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (im_.is_zero()) return ExactScalar(re_.inverse());
  Rational n = norm2();
  return {re_ / n, -im_ / n};
}

ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
  if (b.im_.is_zero()) {
    if (b.re_.is_zero()) throw DivisionByZero();
    Rational inv = b.re_.inverse();
    if (a.im_.is_zero()) return ExactScalar(a.re_ * inv);
    return {a.re_ * inv, a.im_ * inv};
  }
  return a * b.inverse();
}

std::optional<ExactScalar> try_div(const ExactScalar& a, const ExactScalar& b) {
  if (b.is_zero()) return std::nullopt;
  return a / b;
}

ExactScalar pow(const ExactScalar& x, unsigned n) {
  ExactScalar result(1);
  ExactScalar base = x;
  while (n != 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n != 0) base *= base;
  }
  return result;
}

std::string ExactScalar::str() const {
  if (im_.is_zero()) return re_.str();
  std::string im_part;
  if (im_ == Rational(1)) {
    im_part = "i";
  } else if (im_ == Rational(-1)) {
    im_part = "-i";
  } else {
    im_part = im_.str() + "*i";
  }
  if (re_.is_zero()) return im_part;
  if (im_part.front() == '-') return re_.str() + im_part;
  return re_.str() + "+" + im_part;
}

namespace {

// One signed term: [+-] digits[/digits] [*] [i]  |  [+-] i
struct Term {
  Rational value;
  bool imaginary = false;
};

Term parse_term(std::string_view s, std::size_t& pos) {
  Term t;
  bool neg = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    neg = s[pos] == '-';
    ++pos;
  }
  std::size_t start = pos;
  while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
  if (pos > start) {
    std::string_view num = s.substr(start, pos - start);
    try {
      t.value = Rational::parse(num);
    } catch (const ParseError& e) {
      throw ParseError("malformed rational", start + e.position());
    }
    if (pos < s.size() && s[pos] == '*') {
      ++pos;
      if (pos >= s.size() || s[pos] != 'i') throw ParseError("expected 'i' after '*'", pos);
    }
    if (pos < s.size() && s[pos] == 'i') {
      t.imaginary = true;
      ++pos;
    }
  } else if (pos < s.size() && s[pos] == 'i') {
    t.value = Rational(1);
    t.imaginary = true;
    ++pos;
  } else {
    throw ParseError("expected a number or 'i'", pos);
  }
  if (neg) t.value = -t.value;
  return t;
}

}  // namespace

ExactScalar ExactScalar::parse(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  if (compact.empty()) throw ParseError("empty scalar", 0);
  std::size_t pos = 0;
  ExactScalar out;
  int terms = 0;
  while (pos < compact.size()) {
    if (terms > 0 && compact[pos] != '+' && compact[pos] != '-') {
      throw ParseError("expected '+' or '-'", pos);
    }
    Term t = parse_term(compact, pos);
    if (t.imaginary) {
      out.im_ += t.value;
    } else {
      out.re_ += t.value;
    }
    ++terms;
  }
  return out;
}

std::string to_string(const ExactScalar& x) { return x.str(); }

}  // namespace jtk
