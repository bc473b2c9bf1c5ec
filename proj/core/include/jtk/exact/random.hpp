#pragma once

#include <cstdint>
#include <random>

#include "jtk/exact/matrix.hpp"

namespace jtk {

/// Seeded generator with a fixed integer mapping, so that sampled values are
/// identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }
  /// Uniform-ish integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(gen_() % span);
  }
  bool coin() { return (gen_() & 1U) != 0; }

  /// Rational p/q with |p| <= num_bound, 1 <= q <= den_bound.
  Rational rational(std::int64_t num_bound = 4, std::int64_t den_bound = 3) {
    return {uniform(-num_bound, num_bound), uniform(1, den_bound)};
  }
  ExactScalar scalar(bool complex = true) {
    Rational re = rational();
    Rational im = complex && coin() ? rational(3, 2) : Rational(0);
    return {re, im};
  }
  Vec vec(std::size_t n, bool complex = true) {
    Vec v(n);
    for (auto& x : v) x = scalar(complex);
    return v;
  }
  /// Nonzero rational.
  Rational nonzero_rational(std::int64_t num_bound = 4, std::int64_t den_bound = 3) {
    for (;;) {
      Rational q = rational(num_bound, den_bound);
      if (!q.is_zero()) return q;
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace jtk
