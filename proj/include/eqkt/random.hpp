#pragma once

// Seeded generators for the randomized checks.

#include <random>

#include "eqkt/bott_tower.hpp"
#include "eqkt/rule_engine.hpp"

namespace eqkt {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// N in [1, max_n], c_{i,j} in [-max_abs_c, max_abs_c].
inline TowerSpec random_tower(Rng& rng, int max_n, int max_abs_c) {
  const int n = uniform(rng, 1, max_n);
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) c[i][j] = uniform(rng, -max_abs_c, max_abs_c);
  return TowerSpec(n, std::move(c));
}

/// Small Laurent polynomial: up to `terms` terms, exponents in [-1,1], coefficients in [-3,3].
inline CharPoly random_char_poly(Rng& rng, std::size_t dim, int terms = 2) {
  CharPoly f(dim);
  const int k = uniform(rng, 1, terms);
  for (int t = 0; t < k; ++t) {
    Exponent e(dim);
    for (auto& x : e) x = uniform(rng, -1, 1);
    f.add_term(e, uniform(rng, -3, 3));
  }
  return f;
}

/// X exponents in [-2,2], Z exponents in [0,2].
inline RulePoly random_rule_poly(Rng& rng, int n, std::size_t dim, int max_terms = 4) {
  RulePoly p(n, dim);
  const int k = uniform(rng, 1, max_terms);
  for (int t = 0; t < k; ++t) {
    RulePoly::Key key(2 * n);
    for (int j = 0; j < n; ++j) key[j] = uniform(rng, -2, 2);
    for (int j = 0; j < n; ++j) key[n + j] = uniform(rng, 0, 2);
    p.add_term(key, random_char_poly(rng, dim));
  }
  return p;
}

}  // namespace eqkt
