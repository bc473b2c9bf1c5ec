#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

namespace jtk {

/// Exponent vector packed 5 bits per variable, variable 0 in the highest field.
/// Up to 12 variables with exponents <= 31. Multiplication is integer addition,
/// and for a fixed degree the packed order is lexicographic order.
using Monomial = std::uint64_t;

namespace mono {

inline constexpr unsigned kBits = 5;
inline constexpr unsigned kMaxVars = 12;
inline constexpr unsigned kMaxExp = 31;

constexpr unsigned shift(unsigned var) { return kBits * (kMaxVars - 1 - var); }
constexpr unsigned exp(Monomial m, unsigned var) { return static_cast<unsigned>((m >> shift(var)) & 31U); }
constexpr Monomial var(unsigned v, unsigned e = 1) { return static_cast<Monomial>(e) << shift(v); }

inline unsigned degree(Monomial m) {
  unsigned d = 0;
  while (m != 0) {
    d += static_cast<unsigned>(m & 31U);
    m >>= kBits;
  }
  return d;
}

/// Product; throws InvalidArgument when an exponent would exceed the field width.
Monomial mul(Monomial a, Monomial b);
/// a / b when b divides a.
bool divides(Monomial b, Monomial a);

Monomial from_exponents(std::span<const unsigned> e);
std::vector<unsigned> exponents(Monomial m, std::size_t nvars);

/// All monomials of total degree `deg` in `nvars` variables, lexicographically descending.
std::vector<Monomial> of_degree(std::size_t nvars, unsigned deg);

}  // namespace mono

/// Coordinate enumeration of monomials with degree in [lo, hi]:
/// descending degree, then lexicographically descending.
class MonomialIndex {
 public:
  MonomialIndex(std::size_t nvars, unsigned lo, unsigned hi);

  /// Shared, cached instance.
  static std::shared_ptr<const MonomialIndex> get(std::size_t nvars, unsigned lo, unsigned hi);

  std::size_t nvars() const noexcept { return nvars_; }
  unsigned lo() const noexcept { return lo_; }
  unsigned hi() const noexcept { return hi_; }
  std::size_t size() const noexcept { return monos_.size(); }
  Monomial at(std::size_t i) const { return monos_.at(i); }
  const std::vector<Monomial>& monomials() const noexcept { return monos_; }
  /// Column of m, or -1 when m is not enumerated.
  std::int64_t find(Monomial m) const;

 private:
  std::size_t nvars_;
  unsigned lo_;
  unsigned hi_;
  std::vector<Monomial> monos_;
  std::unordered_map<Monomial, std::uint32_t> pos_;
};

using MonomialIndexPtr = std::shared_ptr<const MonomialIndex>;

}  // namespace jtk
