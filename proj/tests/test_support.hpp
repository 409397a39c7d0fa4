#pragma once

#include <random>

#include "yangsym/pbw.hpp"
#include "yangsym/series.hpp"

namespace yangsym::testing {

inline Rational random_rational(std::mt19937_64& rng, int range = 3) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, range);
  return Rational(num(rng), den(rng));
}

/// Random free-algebra element over `letters` generators, words of length <= 2.
inline FreeElement random_free(std::mt19937_64& rng, int letters = 3) {
  std::uniform_int_distribution<int> len(0, 2);
  std::uniform_int_distribution<int> gen(0, letters - 1);
  FreeElement x;
  for (int t = 0; t < 3; ++t) {
    Word w;
    const int l = len(rng);
    for (int s = 0; s < l; ++s) w.push_back(static_cast<GenId>(gen(rng)));
    x.add(w, random_rational(rng));
  }
  return x;
}

inline USeries<FreeElement> random_free_series(std::mt19937_64& rng, int order) {
  std::vector<FreeElement> c;
  for (int m = 0; m <= order; ++m) c.push_back(random_free(rng));
  return USeries<FreeElement>(order, std::move(c));
}

inline USeries<Rational> rational_series(int order, std::vector<long> coeffs) {
  std::vector<Rational> c;
  for (long x : coeffs) c.emplace_back(x);
  return USeries<Rational>(order, std::move(c));
}

}  // namespace yangsym::testing
