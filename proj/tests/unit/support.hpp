#pragma once

#include <random>
#include <string_view>

#include "jtk/exact/matrix.hpp"
#include "jtk/poly/poly.hpp"

namespace jtk::testing {

inline ExactScalar S(std::string_view s) { return ExactScalar::parse(s); }

inline int small_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
}

inline ExactScalar random_scalar(std::mt19937_64& rng, bool complex = true) {
  Rational re(small_int(rng, -4, 4), small_int(rng, 1, 3));
  Rational im = complex && rng() % 2 ? Rational(small_int(rng, -3, 3), small_int(rng, 1, 2)) : Rational(0);
  return {re, im};
}

inline Vec random_vec(std::mt19937_64& rng, std::size_t n, bool complex = true) {
  Vec v(n);
  for (auto& x : v) x = random_scalar(rng, complex);
  return v;
}

inline Poly random_poly(std::mt19937_64& rng, std::size_t nvars, unsigned max_deg, int terms) {
  Poly p(nvars);
  for (int t = 0; t < terms; ++t) {
    std::vector<unsigned> e(nvars, 0);
    unsigned d = static_cast<unsigned>(rng() % (max_deg + 1));
    for (unsigned k = 0; k < d; ++k) ++e[rng() % nvars];
    p.add_term(mono::from_exponents(e), random_scalar(rng));
  }
  return p;
}

inline Poly random_homogeneous(std::mt19937_64& rng, std::size_t nvars, unsigned deg, int terms) {
  Poly p(nvars);
  for (int t = 0; t < terms; ++t) {
    std::vector<unsigned> e(nvars, 0);
    for (unsigned k = 0; k < deg; ++k) ++e[rng() % nvars];
    p.add_term(mono::from_exponents(e), random_scalar(rng));
  }
  return p;
}

}  // namespace jtk::testing
