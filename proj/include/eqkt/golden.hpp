#pragma once

// Published reference values for A2, B2, G2 and the Hirzebruch surface H_{-1}.
// Words are 1-based, the identity is the empty word.

#include <vector>

#include "eqkt/char_ring.hpp"

namespace eqkt::golden {

/// e^{a alpha_1 + b alpha_2}
inline CharPoly E(int a, int b) { return CharPoly::monomial({a, b}); }
/// 1 - e^{a alpha_1 + b alpha_2}
inline CharPoly OM(int a, int b) { return CharPoly::one_minus({a, b}); }
inline CharPoly ONE() { return CharPoly::constant(2, 1); }

struct Term {
  std::vector<int> w;
  CharPoly q;
};

/// psi^u psi^v = sum q_{u,v}^w psi^w
struct Product {
  std::vector<int> u, v;
  std::vector<Term> terms;
};

/// Single structure constant q_{u,v}^w.
struct Value {
  std::vector<int> u, v, w;
  CharPoly q;
};

namespace detail {

inline std::vector<int> swap_word(const std::vector<int>& w) {
  std::vector<int> o;
  for (int k : w) o.push_back(3 - k);
  return o;
}

inline CharPoly swap_roots(const CharPoly& f) {
  CharPoly g(2);
  for (const auto& [e, c] : f.terms()) g.add_term({e[1], e[0]}, c);
  return g;
}

// s2 s1 s2 is written s1 s2 s1
inline std::vector<int> swap_normalized(const std::vector<int>& w) {
  auto s = swap_word(w);
  if (s == std::vector<int>{2, 1, 2}) s = {1, 2, 1};
  return s;
}

inline Product swapped(const Product& p) {
  Product s{swap_normalized(p.u), swap_normalized(p.v), {}};
  for (const auto& t : p.terms) s.terms.push_back({swap_normalized(t.w), swap_roots(t.q)});
  return s;
}

}  // namespace detail

/// Every product of two basis elements of A2 (21 unordered pairs).
inline std::vector<Product> a2_products() {
  const std::vector<int> e{}, s1{1}, s2{2}, s12{1, 2}, s21{2, 1}, w0{1, 2, 1};
  std::vector<Product> base = {
      {e, e,
       {{e, ONE()},
        {s1, -E(1, 0)},
        {s2, -E(0, 1)},
        {s12, E(1, 1) * (ONE() + E(1, 0))},
        {s21, E(1, 1) * (ONE() + E(0, 1))},
        {w0, -E(2, 2)}}},
      {e, s1,
       {{s1, E(1, 0)}, {s12, -E(2, 1)}, {s21, -(E(1, 1) * (ONE() + E(0, 1)))}, {w0, E(2, 2)}}},
      {s1, s1,
       {{s1, OM(1, 0)},
        {s12, -(E(1, 1) * OM(1, 0))},
        {s21, -(E(0, 1) * (OM(1, 0) - E(1, 1)))},
        {w0, -E(2, 2)}}},
      {s1, s2, {{s12, E(2, 1)}, {s21, E(1, 2)}, {w0, -E(2, 2)}}},
      {e, w0, {{w0, E(2, 2)}}},
      {s1, w0, {{w0, E(1, 1) * OM(1, 1)}}},
      {s12, w0, {{w0, E(0, 1) * OM(1, 0) * OM(1, 1)}}},
      {w0, w0, {{w0, OM(1, 0) * OM(0, 1) * OM(1, 1)}}},
      {s12, s12, {{s12, OM(1, 0) * OM(1, 1)}, {w0, -(E(0, 1) * OM(1, 0) * OM(1, 1))}}},
      {s1, s21, {{s21, E(0, 1) * OM(1, 1)}, {w0, -(E(1, 1) * OM(1, 1))}}},
      {s1, s12, {{s12, E(1, 1) * OM(1, 0)}, {w0, E(2, 2)}}},
      {e, s12, {{s12, E(2, 1)}, {w0, -E(2, 2)}}},
      {s12, s21, {{w0, E(1, 1) * OM(1, 1)}}},
  };
  // the remaining products follow by exchanging s_1, s_2 and alpha_1, alpha_2
  std::vector<Product> out = base;
  for (const auto& p : base) {
    Product s = detail::swapped(p);
    auto same_pair = [&](const Product& q) {
      return (q.u == s.u && q.v == s.v) || (q.u == s.v && q.v == s.u);
    };
    bool dup = false;
    for (const auto& q : out) dup = dup || same_pair(q);
    if (!dup) out.push_back(std::move(s));
  }
  return out;
}

inline std::vector<Value> b2_values() {
  return {
      {{}, {1}, {2, 1, 2}, E(3, 2) * (ONE() + E(0, 1))},
      {{}, {1}, {2, 1, 2, 1}, -E(4, 3)},
      {{1, 2}, {1, 2}, {2, 1, 2, 1}, -(E(2, 2) * OM(2, 1))},
  };
}

inline std::vector<Value> g2_values() {
  return {
      {{2}, {2, 1}, {1, 2, 1, 2}, -(E(3, 6) * (ONE() + E(1, 0) + E(2, 0)))},
  };
}

/// t_{1,1}^{s2 s1 s2 s1 s2} in G2
inline constexpr int g2_t_value = -13;
inline std::vector<int> g2_t_word() { return {2, 1, 2, 1, 2}; }
/// x-exponents of m_5 for the G2 word (2,1,2,1,2)
inline std::vector<int> g2_m5() { return {-2, 1, -2, 1, 0}; }

/// mu_{eps^i}(eps^j) for C = {c_12 = -1}, order (0,0), (1,0), (0,1), (1,1);
/// characters over l1, l2.
inline std::vector<std::vector<CharPoly>> hirzebruch_matrix() {
  auto L = [](int a, int b) { return CharPoly::monomial({a, b}); };
  auto om = [](int a, int b) { return CharPoly::one_minus({a, b}); };
  const CharPoly Z(2), I = CharPoly::constant(2, 1);
  return {
      {I, L(-1, 0), L(0, -1), L(-2, -1)},
      {Z, om(-1, 0), Z, L(-1, -1) * om(-1, 0)},
      {Z, Z, om(0, -1), L(-1, 0) * om(-1, -1)},
      {Z, Z, Z, om(-1, 0) * om(-1, -1)},
  };
}

/// chi(Gamma, mu_(1,0,0) mu_(0,0,1)) for the A2 word (1,2,1)
inline CharPoly bott_samelson_example() { return E(-2, -2) - E(-1, -1); }

}  // namespace eqkt::golden
