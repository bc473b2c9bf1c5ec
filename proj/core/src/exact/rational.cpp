#include "jtk/exact/rational.hpp"

#include <cctype>
#include <limits>
#include <numeric>

#include "jtk/error.hpp"

namespace jtk {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    if ((a >> 64) == 0 && (b >> 64) == 0) {
      return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    }
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

mpz_class mpz_from_u128(u128 v) {
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(v >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(v)));
  return (hi << 64) + lo;
}

std::uint64_t uabs64(std::int64_t v) {
  return v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw DivisionByZero();
  i128 nn = n;
  i128 dd = d;
  if (dd < 0) {
    nn = -nn;
    dd = -dd;
  }
  assign(nn, static_cast<u128>(dd));
}

Rational::Rational(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  assign(std::move(c));
}

void Rational::assign(i128 n, u128 d) {
  u128 an = abs128(n);
  u128 g = gcd128(an, d);
  if (g > 1) {
    an /= g;
    d /= g;
  }
  if (an <= static_cast<u128>(kMax) && d <= static_cast<u128>(kMax)) {
    num_ = n < 0 ? -static_cast<std::int64_t>(an) : static_cast<std::int64_t>(an);
    den_ = static_cast<std::int64_t>(d);
    big_.reset();
    return;
  }
  mpz_class zn = mpz_from_u128(an);
  if (n < 0) zn = -zn;
  big_ = std::make_unique<mpq_class>(zn, mpz_from_u128(d));
  num_ = 0;
  den_ = 1;
}

void Rational::assign(mpq_class&& q) {
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (mpz_fits_slong_p(n.get_mpz_t()) && mpz_fits_slong_p(d.get_mpz_t())) {
    long ln = n.get_si();
    long ld = d.get_si();
    if (ln != std::numeric_limits<long>::min()) {
      num_ = ln;
      den_ = ld;
      big_.reset();
      return;
    }
  }
  big_ = std::make_unique<mpq_class>(std::move(q));
  num_ = 0;
  den_ = 1;
}

bool Rational::is_integer() const {
  if (!big_) return den_ == 1;
  return big_->get_den() == 1;
}

int Rational::sign() const {
  if (!big_) return (num_ > 0) - (num_ < 0);
  return sgn(*big_);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q{mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_))};
  return q;
}

mpz_class Rational::numerator() const {
  return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
  return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_));
}

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  std::size_t pos = 0;
  bool neg = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    neg = text[pos] == '-';
    ++pos;
  }
  auto digits = [&](std::size_t& p) {
    std::size_t start = p;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
    if (p == start) throw ParseError("expected digits", p);
    return std::string(text.substr(start, p - start));
  };
  mpz_class n(digits(pos));
  mpz_class d(1);
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    d = mpz_class(digits(pos));
    if (d == 0) throw DivisionByZero();
  }
  if (pos != text.size()) throw ParseError("unexpected character in rational", pos);
  if (neg) n = -n;
  return Rational(mpq_class(n, d));
}

Rational Rational::operator-() const {
  Rational r;
  if (big_) {
    r.assign(mpq_class(-*big_));
  } else {
    r.num_ = -num_;
    r.den_ = den_;
  }
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Rational r;
  if (big_) {
    mpq_class q = 1 / *big_;
    r.assign(std::move(q));
  } else if (num_ < 0) {
    r.num_ = -den_;
    r.den_ = -num_;
  } else {
    r.num_ = den_;
    r.den_ = num_;
  }
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  Rational r;
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      i128 s = static_cast<i128>(a.num_) + b.num_;
      if (s <= kMax && s >= -kMax) {
        r.num_ = static_cast<std::int64_t>(s);
        return r;
      }
      r.assign(s, 1);
      return r;
    }
    if (a.den_ == b.den_) {
      r.assign(static_cast<i128>(a.num_) + b.num_, static_cast<u128>(a.den_));
      return r;
    }
    i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
    r.assign(n, static_cast<u128>(a.den_) * static_cast<u128>(b.den_));
    return r;
  }
  r.assign(mpq_class(a.to_mpq() + b.to_mpq()));
  return r;
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  Rational r;
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return r;
    std::uint64_t g1 = std::gcd(uabs64(a.num_), static_cast<std::uint64_t>(b.den_));
    std::uint64_t g2 = std::gcd(uabs64(b.num_), static_cast<std::uint64_t>(a.den_));
    i128 n = static_cast<i128>(a.num_ / static_cast<std::int64_t>(g1)) *
             static_cast<i128>(b.num_ / static_cast<std::int64_t>(g2));
    u128 d = static_cast<u128>(a.den_ / static_cast<std::int64_t>(g2)) *
             static_cast<u128>(b.den_ / static_cast<std::int64_t>(g1));
    if (d == 1 && n <= kMax && n >= -kMax) {
      r.num_ = static_cast<std::int64_t>(n);
      return r;
    }
    r.assign(n, d);
    return r;
  }
  r.assign(mpq_class(a.to_mpq() * b.to_mpq()));
  return r;
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

bool operator<(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
  }
  return a.to_mpq() < b.to_mpq();
}

std::string to_string(const Rational& q) { return q.str(); }

}  // namespace jtk
