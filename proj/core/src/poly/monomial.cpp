#include "jtk/poly/monomial.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "jtk/error.hpp"

namespace jtk {
namespace mono {

Monomial mul(Monomial a, Monomial b) {
  // Field-wise carry check: a field overflows iff its 6th bit would be set.
  Monomial s = a + b;
  constexpr Monomial kLow = [] {
    Monomial m = 0;
    for (unsigned j = 0; j < kMaxVars; ++j) m |= Monomial{1} << (kBits * j);
    return m;
  }();
  Monomial carries = (s ^ a ^ b) & (kLow << kBits);
  if (carries != 0) throw InvalidArgument("monomial exponent overflow");
  return s;
}

bool divides(Monomial b, Monomial a) {
  for (unsigned v = 0; v < kMaxVars; ++v) {
    if (exp(b, v) > exp(a, v)) return false;
  }
  return true;
}

Monomial from_exponents(std::span<const unsigned> e) {
  if (e.size() > kMaxVars) throw InvalidArgument("too many variables for packed monomials");
  Monomial m = 0;
  for (unsigned v = 0; v < e.size(); ++v) {
    if (e[v] > kMaxExp) throw InvalidArgument("monomial exponent overflow");
    m |= var(v, e[v]);
  }
  return m;
}

std::vector<unsigned> exponents(Monomial m, std::size_t nvars) {
  std::vector<unsigned> e(nvars);
  for (unsigned v = 0; v < nvars; ++v) e[v] = exp(m, v);
  return e;
}

namespace {

void enumerate(std::size_t nvars, unsigned v, unsigned left, Monomial acc, std::vector<Monomial>& out) {
  if (v + 1 == nvars) {
    out.push_back(acc | var(v, left));
    return;
  }
  for (unsigned e = left + 1; e-- > 0;) enumerate(nvars, v + 1, left - e, acc | var(v, e), out);
}

}  // namespace

std::vector<Monomial> of_degree(std::size_t nvars, unsigned deg) {
  if (nvars > kMaxVars) throw InvalidArgument("too many variables for packed monomials");
  if (deg > kMaxExp) throw InvalidArgument("degree exceeds packed exponent range");
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (deg == 0) out.push_back(0);
    return out;
  }
  enumerate(nvars, 0, deg, 0, out);
  return out;
}

}  // namespace mono

MonomialIndex::MonomialIndex(std::size_t nvars, unsigned lo, unsigned hi) : nvars_(nvars), lo_(lo), hi_(hi) {
  if (lo > hi) throw InvalidArgument("MonomialIndex: empty degree range");
  for (unsigned d = hi + 1; d-- > lo;) {
    auto part = mono::of_degree(nvars, d);
    monos_.insert(monos_.end(), part.begin(), part.end());
  }
  pos_.reserve(monos_.size());
  for (std::size_t i = 0; i < monos_.size(); ++i) pos_.emplace(monos_[i], static_cast<std::uint32_t>(i));
}

std::shared_ptr<const MonomialIndex> MonomialIndex::get(std::size_t nvars, unsigned lo, unsigned hi) {
  static std::mutex mu;
  static std::map<std::tuple<std::size_t, unsigned, unsigned>, std::shared_ptr<const MonomialIndex>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{nvars, lo, hi}];
  if (!slot) slot = std::make_shared<const MonomialIndex>(nvars, lo, hi);
  return slot;
}

std::int64_t MonomialIndex::find(Monomial m) const {
  auto it = pos_.find(m);
  return it == pos_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

}  // namespace jtk
