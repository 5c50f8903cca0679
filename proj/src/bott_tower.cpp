#include "eqkt/bott_tower.hpp"

#include <string>

#include "eqkt/error.hpp"
#include "eqkt/rule_engine.hpp"

namespace eqkt {

TowerSpec::TowerSpec(int n, std::vector<std::vector<int>> c) : n_(n), c_(std::move(c)) {
  if (n < 1 || n > BitWord::kMaxLength) throw InvalidInput("tower size out of range");
  if (static_cast<int>(c_.size()) != n) throw InvalidInput("tower matrix has wrong size");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(c_[i].size()) != n) throw InvalidInput("tower matrix has wrong size");
    for (int j = 0; j <= i; ++j) c_[i][j] = 0;
  }
}

TowerSpec TowerSpec::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw InvalidInput("tower spec needs an integer field n");
  int n = j["n"].get<int>();
  if (n < 1 || n > BitWord::kMaxLength) throw InvalidInput("tower size out of range");
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  if (j.contains("c")) {
    if (!j["c"].is_object()) throw InvalidInput("tower field c must be an object");
    for (const auto& [key, val] : j["c"].items()) {
      auto comma = key.find(',');
      if (comma == std::string::npos || !val.is_number_integer())
        throw InvalidInput("bad tower entry " + key);
      int a, b;
      try {
        a = std::stoi(key.substr(0, comma));
        b = std::stoi(key.substr(comma + 1));
      } catch (const std::exception&) {
        throw InvalidInput("bad tower entry " + key);
      }
      if (a < 1 || b > n || a >= b) throw InvalidInput("tower entry must satisfy 1 <= i < j <= n: " + key);
      c[a - 1][b - 1] = val.get<int>();
    }
  }
  return TowerSpec(n, std::move(c));
}

nlohmann::json TowerSpec::to_json() const {
  nlohmann::json c = nlohmann::json::object();
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (c_[i][j] != 0) c[std::to_string(i + 1) + "," + std::to_string(j + 1)] = c_[i][j];
  return {{"n", n_}, {"c", c}};
}

FixedPointClass pointwise_product(const FixedPointClass& a, const FixedPointClass& b) {
  if (a.n != b.n) throw InvalidInput("fixed point classes of different towers");
  FixedPointClass r{a.n, {}};
  r.values.reserve(a.values.size());
  for (std::size_t k = 0; k < a.values.size(); ++k) r.values.push_back(a.values[k] * b.values[k]);
  return r;
}

static void check_eps(const TowerSpec& spec, const BitWord& eps) {
  if (eps.n != spec.n()) throw InvalidInput("bit word length does not match the tower");
}

std::vector<std::vector<int>> c_eps_table(const TowerSpec& spec, const BitWord& eps) {
  check_eps(spec, eps);
  const int n = spec.n();
  std::vector<std::vector<int>> t(n, std::vector<int>(n, 0));
  for (int l = 0; l < n; ++l)
    for (int k = l - 1; k >= 0; --k) {
      long v = -spec.c(k, l);
      for (int m = k + 1; m < l; ++m)
        if (eps.bit(m)) v -= static_cast<long>(spec.c(m, l)) * t[k][m];
      t[k][l] = static_cast<int>(v);
    }
  return t;
}

int c_eps(const TowerSpec& spec, const BitWord& eps, int k, int l) {
  if (!(0 <= k && k < l && l < spec.n())) throw InvalidInput("c_eps needs 1 <= k < l <= N");
  return c_eps_table(spec, eps)[k][l];
}

static Exponent lambda_from_table(const std::vector<std::vector<int>>& t, const BitWord& eps, int i) {
  Exponent e(eps.n, 0);
  e[i] = 1;
  for (int j = 0; j < i; ++j)
    if (eps.bit(j)) e[j] += t[j][i];
  return eps.bit(i) ? e : -e;
}

Exponent lambda_eps(const TowerSpec& spec, const BitWord& eps, int i) {
  if (i < 0 || i >= spec.n()) throw InvalidInput("tower index out of range");
  return lambda_from_table(c_eps_table(spec, eps), eps, i);
}

FixedPointClass restrict_generator(const TowerSpec& spec, Generator which, int i) {
  const int n = spec.n();
  if (i < 0 || i >= n) throw InvalidInput("tower index out of range");
  FixedPointClass out{n, {}};
  for (const auto& eps : all_bitwords(n)) {
    auto t = c_eps_table(spec, eps);
    CharPoly v(n);
    switch (which) {
      case Generator::E:
        v = eps.bit(i) ? CharPoly::monomial(-lambda_from_table(t, eps, i)) : CharPoly::constant(n, 1);
        break;
      case Generator::F:
        v = eps.bit(i) ? CharPoly::one_minus(-lambda_from_table(t, eps, i)) : CharPoly(n);
        break;
      case Generator::L: {
        Exponent e(n, 0);
        e[i] = -1;
        for (int j = 0; j < i; ++j)
          if (eps.bit(j)) e[j] -= t[j][i];
        v = CharPoly::monomial(e);
        break;
      }
    }
    out.values.push_back(std::move(v));
  }
  return out;
}

FixedPointClass restrict_basis_class(const TowerSpec& spec, const BitWord& eps) {
  check_eps(spec, eps);
  const int n = spec.n();
  FixedPointClass out{n, {}};
  for (const auto& at : all_bitwords(n)) {
    CharPoly v(n);
    if (eps.leq(at)) {
      auto t = c_eps_table(spec, at);
      Exponent unit(n, 0);
      for (int i : at.plus()) unit = unit - lambda_from_table(t, at, i);
      v = CharPoly::monomial(unit);
      for (int i : eps.plus()) v *= -CharPoly::one_minus(lambda_from_table(t, at, i));
    }
    out.values.push_back(std::move(v));
  }
  return out;
}

CharPoly chi_localized(const TowerSpec& spec, const BitWord& eps, const FixedPointClass& cls) {
  check_eps(spec, eps);
  if (cls.n != spec.n()) throw InvalidInput("class belongs to a different tower");
  // Fixed points eps' and eps' + (j) share every weight below j and have
  // opposite j-th weights, so the top index can be summed out pairwise:
  //   g(eps')/(1 - e^{-x}) + g(eps'+(j))/(1 - e^{x}) = (g(eps') - e^{-x} g(eps'+(j)))/(1 - e^{-x})
  // with x = lambda_j(eps'), leaving a class on the smaller cell.
  std::vector<CharPoly> g = cls.values;
  auto plus = eps.plus();
  std::uint32_t remaining = eps.mask;
  for (auto it = plus.rbegin(); it != plus.rend(); ++it) {
    const int j = *it;
    const std::uint32_t bit = 1u << j;
    remaining &= ~bit;
    for (std::uint32_t s = remaining;; s = (s - 1) & remaining) {
      BitWord at(spec.n(), s);
      Exponent x = lambda_eps(spec, at, j);
      CharPoly num = g[s] - g[s | bit] * CharPoly::monomial(-x);
      g[s] = exact_div(num, CharPoly::one_minus(-x));
      if (s == 0) break;
    }
  }
  return g[0];
}

CharPoly tower_structure_const(const TowerSpec& spec, const BitWord& e1, const BitWord& e2,
                               const BitWord& e3) {
  check_eps(spec, e1);
  check_eps(spec, e2);
  check_eps(spec, e3);
  LMonomials L = build_L(spec);
  RulePoly p = build_S(e1, spec.n()) * build_S(e2, spec.n());
  return r_op(L, e3, p);
}

}  // namespace eqkt
