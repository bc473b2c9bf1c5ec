#include "jtk/poly/poly.hpp"

#include <algorithm>
#include <cctype>

#include "jtk/error.hpp"

namespace jtk {

Poly Poly::constant(std::size_t nvars, const ExactScalar& c) {
  Poly p(nvars);
  p.add_term(0, c);
  return p;
}

Poly Poly::variable(std::size_t nvars, unsigned i) {
  if (i >= nvars) throw InvalidArgument("variable index out of range");
  return monomial(nvars, mono::var(i));
}

Poly Poly::monomial(std::size_t nvars, Monomial m, const ExactScalar& c) {
  Poly p(nvars);
  p.add_term(m, c);
  return p;
}

Poly Poly::linear(std::span<const ExactScalar> coeffs) {
  Poly p(coeffs.size());
  for (unsigned i = 0; i < coeffs.size(); ++i) p.add_term(mono::var(i), coeffs[i]);
  return p;
}

ExactScalar Poly::coeff(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? ExactScalar() : it->second;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(mono::degree(m)));
  return d;
}

int Poly::min_degree() const {
  if (terms_.empty()) return -1;
  int d = mono::kMaxExp * mono::kMaxVars;
  for (const auto& [m, c] : terms_) d = std::min(d, static_cast<int>(mono::degree(m)));
  return d;
}

bool Poly::is_homogeneous() const { return degree() == min_degree(); }

Poly Poly::homogeneous_part(unsigned deg) const {
  Poly p(nvars_);
  for (const auto& [m, c] : terms_) {
    if (mono::degree(m) == deg) p.terms_.emplace_hint(p.terms_.end(), m, c);
  }
  return p;
}

void Poly::add_term(Monomial m, const ExactScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly p(nvars_);
  for (const auto& [m, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), m, -c);
  return p;
}

Poly& Poly::operator+=(const Poly& q) {
  if (q.nvars_ != nvars_) throw DimensionMismatch("poly +: nvars mismatch");
  for (const auto& [m, c] : q.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& q) {
  if (q.nvars_ != nvars_) throw DimensionMismatch("poly -: nvars mismatch");
  for (const auto& [m, c] : q.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& p, const Poly& q) {
  if (p.nvars_ != q.nvars_) throw DimensionMismatch("poly *: nvars mismatch");
  Poly r(p.nvars_);
  for (const auto& [m1, c1] : p.terms_)
    for (const auto& [m2, c2] : q.terms_) r.add_term(mono::mul(m1, m2), c1 * c2);
  return r;
}

Poly operator*(const ExactScalar& s, const Poly& p) {
  Poly r(p.nvars_);
  if (s.is_zero()) return r;
  for (const auto& [m, c] : p.terms_) r.terms_.emplace_hint(r.terms_.end(), m, s * c);
  return r;
}

Poly Poly::pow(unsigned n) const {
  Poly result = constant(nvars_, ExactScalar(1));
  Poly base = *this;
  while (n != 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n != 0) base = base * base;
  }
  return result;
}

ExactScalar Poly::eval(std::span<const ExactScalar> z) const {
  if (z.size() != nvars_) throw DimensionMismatch("eval: point dimension mismatch");
  std::vector<std::vector<ExactScalar>> pw(nvars_, std::vector<ExactScalar>{ExactScalar(1)});
  auto power = [&](unsigned v, unsigned e) -> const ExactScalar& {
    auto& row = pw[v];
    while (row.size() <= e) row.push_back(row.back() * z[v]);
    return row[e];
  };
  ExactScalar acc;
  for (const auto& [m, c] : terms_) {
    ExactScalar t = c;
    for (unsigned v = 0; v < nvars_ && !t.is_zero(); ++v) {
      unsigned e = mono::exp(m, v);
      if (e) t *= power(v, e);
    }
    acc += t;
  }
  return acc;
}

Poly Poly::conj_coeffs() const {
  Poly p(nvars_);
  for (const auto& [m, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), m, c.conj());
  return p;
}

Poly Poly::partial(unsigned i) const {
  if (i >= nvars_) throw InvalidArgument("partial: variable index out of range");
  Poly p(nvars_);
  for (const auto& [m, c] : terms_) {
    unsigned e = mono::exp(m, i);
    if (e == 0) continue;
    p.add_term(m - mono::var(i), ExactScalar(static_cast<int>(e)) * c);
  }
  return p;
}

Poly Poly::compose_linear(const ExactMatrix& m) const {
  if (m.rows() != nvars_ || m.cols() != nvars_) throw DimensionMismatch("compose_linear: matrix size mismatch");
  Vec zero(nvars_);
  return compose_affine(m, zero);
}

Poly Poly::compose_affine(const ExactMatrix& m, std::span<const ExactScalar> c) const {
  if (m.rows() != nvars_ || c.size() != nvars_) throw DimensionMismatch("compose_affine: size mismatch");
  const std::size_t k = m.cols();
  std::vector<std::vector<Poly>> pw(nvars_);
  for (unsigned i = 0; i < nvars_; ++i) {
    Poly li = constant(k, c[i]);
    for (unsigned j = 0; j < k; ++j) li.add_term(mono::var(j), m(i, j));
    pw[i].push_back(constant(k, ExactScalar(1)));
    pw[i].push_back(std::move(li));
  }
  auto power = [&](unsigned v, unsigned e) -> const Poly& {
    auto& row = pw[v];
    while (row.size() <= e) row.push_back(row.back() * row[1]);
    return row[e];
  };
  Poly out(k);
  for (const auto& [mm, coef] : terms_) {
    Poly t = constant(k, coef);
    for (unsigned v = 0; v < nvars_ && !t.is_zero(); ++v) {
      unsigned e = mono::exp(mm, v);
      if (e) t = t * power(v, e);
    }
    out += t;
  }
  return out;
}

Poly Poly::derive(const ExactMatrix& a) const {
  if (a.rows() != nvars_ || a.cols() != nvars_) throw DimensionMismatch("derive: matrix size mismatch");
  Poly out(nvars_);
  for (const auto& [m, c] : terms_) {
    for (unsigned i = 0; i < nvars_; ++i) {
      unsigned e = mono::exp(m, i);
      if (e == 0) continue;
      Monomial base = m - mono::var(i);
      ExactScalar ce = ExactScalar(static_cast<int>(e)) * c;
      for (unsigned j = 0; j < nvars_; ++j) {
        const ExactScalar& aij = a(i, j);
        if (aij.is_zero()) continue;
        out.add_term(base + mono::var(j), ce * aij);
      }
    }
  }
  return out;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, const ExactScalar*>> order;
  for (const auto& [m, c] : terms_) order.emplace_back(m, &c);
  std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
    unsigned dx = mono::degree(x.first), dy = mono::degree(y.first);
    return dx != dy ? dx > dy : x.first > y.first;
  });
  std::string s;
  bool first = true;
  for (const auto& [m, cp] : order) {
    ExactScalar c = *cp;
    bool neg = c.is_real() && c.re().sign() < 0;
    if (neg) c = -c;
    if (first) {
      s += neg ? "-" : "";
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    std::string vars;
    for (unsigned v = 0; v < nvars_; ++v) {
      unsigned e = mono::exp(m, v);
      if (e == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "z" + std::to_string(v);
      if (e > 1) vars += "^" + std::to_string(e);
    }
    std::string cs;
    if (c.is_real() && c.re().is_integer()) {
      cs = c.str();
    } else {
      cs = "(" + c.str() + ")";
    }
    if (vars.empty()) {
      s += cs;
    } else if (c.is_one()) {
      s += vars;
    } else {
      s += cs + "*" + vars;
    }
  }
  return s;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t nvars) : s_(text), n_(nvars) {}

  Poly parse() {
    Poly p(n_);
    skip();
    if (pos_ == s_.size()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (pos_ < s_.size()) {
      bool neg = false;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        neg = s_[pos_] == '-';
        ++pos_;
        skip();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      Poly t = term();
      p += neg ? -t : t;
      first = false;
      skip();
    }
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  Poly term() {
    Poly t = factor();
    skip();
    while (pos_ < s_.size() && s_[pos_] == '*') {
      ++pos_;
      skip();
      t = t * factor();
      skip();
    }
    return t;
  }

  Poly factor() {
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char ch = s_[pos_];
    if (ch == '(') {
      std::size_t close = s_.find(')', pos_);
      if (close == std::string_view::npos) throw ParseError("unbalanced '('", pos_);
      ExactScalar c;
      try {
        c = ExactScalar::parse(s_.substr(pos_ + 1, close - pos_ - 1));
      } catch (const ParseError& e) {
        throw ParseError("malformed coefficient", pos_ + 1 + e.position());
      }
      pos_ = close + 1;
      return Poly::constant(n_, c);
    }
    if (ch == 'z') {
      std::size_t start = pos_++;
      std::size_t idx = digits();
      if (idx >= n_) throw ParseError("variable index out of range", start);
      unsigned e = 1;
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        e = static_cast<unsigned>(digits());
      }
      if (e > mono::kMaxExp) throw ParseError("exponent too large", start);
      return Poly::monomial(n_, mono::var(static_cast<unsigned>(idx), e));
    }
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == 'i') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
      if (pos_ < s_.size() && s_[pos_] == 'i') ++pos_;
      try {
        return Poly::constant(n_, ExactScalar::parse(s_.substr(start, pos_ - start)));
      } catch (const ParseError& e) {
        throw ParseError("malformed number", start + e.position());
      }
    }
    throw ParseError("unexpected character", pos_);
  }

  std::size_t digits() {
    std::size_t start = pos_;
    std::size_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::size_t>(s_[pos_] - '0');
      if (v > 1000) throw ParseError("number too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected digits", pos_);
    return v;
  }

  std::string_view s_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(std::string_view text, std::size_t nvars) { return PolyParser(text, nvars).parse(); }

Poly normal_project(const Poly& p, std::span<const ExactScalar> c, const std::vector<Vec>& w_basis) {
  ExactMatrix m = ExactMatrix::from_columns(w_basis, p.nvars());
  return p.compose_affine(m, c);
}

SparseVec to_coords(const Poly& p, const MonomialIndex& index) {
  if (p.nvars() != index.nvars()) throw DimensionMismatch("to_coords: nvars mismatch");
  SparseVec v;
  v.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    std::int64_t j = index.find(m);
    if (j < 0) throw InvalidArgument("to_coords: term outside the monomial range");
    v.emplace_back(static_cast<std::uint32_t>(j), c);
  }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

Poly from_coords(const SparseVec& v, const MonomialIndex& index) {
  Poly p(index.nvars());
  for (const auto& [j, c] : v) p.add_term(index.at(j), c);
  return p;
}

PolySubspace::PolySubspace(MonomialIndexPtr index, Subspace space) : index_(std::move(index)), space_(std::move(space)) {
  if (space_.ambient_dim() != index_->size()) throw DimensionMismatch("PolySubspace: ambient mismatch");
}

PolySubspace PolySubspace::span(const std::vector<Poly>& polys, MonomialIndexPtr index) {
  SpanBuilder b(index->size());
  for (const auto& p : polys) b.insert(to_coords(p, *index));
  return PolySubspace(std::move(index), b.finish());
}

PolySubspace PolySubspace::full(MonomialIndexPtr index) {
  Subspace s = Subspace::full(index->size());
  return PolySubspace(std::move(index), std::move(s));
}

bool PolySubspace::contains(const Poly& p) const {
  for (const auto& [m, c] : p.terms()) {
    if (index_->find(m) < 0) return false;
  }
  return space_.contains(to_coords(p, *index_));
}

bool PolySubspace::contains(const PolySubspace& other) const {
  const auto& a = *index_;
  const auto& b = *other.index_;
  if (a.nvars() == b.nvars() && a.lo() == b.lo() && a.hi() == b.hi()) return space_.contains(other.space_);
  for (const auto& p : other.basis()) {
    if (!contains(p)) return false;
  }
  return true;
}

std::vector<Poly> PolySubspace::basis() const {
  std::vector<Poly> out;
  out.reserve(space_.dim());
  for (const auto& r : space_.basis()) out.push_back(from_coords(r, *index_));
  return out;
}

namespace {
void same_index(const PolySubspace& a, const PolySubspace& b) {
  if (a.index()->nvars() != b.index()->nvars() || a.index()->lo() != b.index()->lo() ||
      a.index()->hi() != b.index()->hi())
    throw DimensionMismatch("PolySubspace: monomial ranges differ");
}
}  // namespace

bool operator==(const PolySubspace& a, const PolySubspace& b) {
  same_index(a, b);
  return a.space_ == b.space_;
}

PolySubspace PolySubspace::sum(const PolySubspace& a, const PolySubspace& b) {
  same_index(a, b);
  return PolySubspace(a.index_, Subspace::sum(a.space_, b.space_));
}

PolySubspace PolySubspace::intersect(const PolySubspace& a, const PolySubspace& b) {
  same_index(a, b);
  return PolySubspace(a.index_, Subspace::intersect(a.space_, b.space_));
}

}  // namespace jtk
