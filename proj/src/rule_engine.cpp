#include "eqkt/rule_engine.hpp"

#include "eqkt/bott_tower.hpp"
#include "eqkt/error.hpp"

namespace eqkt {

// ---- RulePoly ----

RulePoly RulePoly::constant(int n, const CharPoly& c) {
  RulePoly p(n, c.dim());
  p.add_term(Key(2 * n, 0), c);
  return p;
}

RulePoly RulePoly::monomial(const Exponent& x, const std::vector<int>& z, const CharPoly& c) {
  if (x.size() != z.size()) throw InvalidInput("monomial x and z parts differ in length");
  RulePoly p(static_cast<int>(x.size()), c.dim());
  Key k = x;
  k.insert(k.end(), z.begin(), z.end());
  p.add_term(k, c);
  return p;
}

void RulePoly::add_term(const Key& key, const CharPoly& c) {
  if (static_cast<int>(key.size()) != 2 * n_) throw InvalidInput("monomial key has wrong length");
  if (c.dim() != dim_) throw InvalidInput("coefficient lattice mismatch");
  for (int k = n_; k < 2 * n_; ++k)
    if (key[k] < 0) throw InvalidInput("negative Z exponent");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void RulePoly::check(const RulePoly& g) const {
  if (g.n_ != n_ || g.dim_ != dim_) throw InvalidInput("polynomials over different rings");
}

RulePoly& RulePoly::operator+=(const RulePoly& g) {
  check(g);
  for (const auto& [k, c] : g.terms_) add_term(k, c);
  return *this;
}

RulePoly& RulePoly::operator-=(const RulePoly& g) {
  check(g);
  for (const auto& [k, c] : g.terms_) add_term(k, -c);
  return *this;
}

RulePoly operator*(const RulePoly& f, const RulePoly& g) {
  f.check(g);
  RulePoly r(f.n_, f.dim_);
  for (const auto& [kf, cf] : f.terms_)
    for (const auto& [kg, cg] : g.terms_) {
      RulePoly::Key k(kf.size());
      for (std::size_t i = 0; i < k.size(); ++i) k[i] = kf[i] + kg[i];
      r.add_term(k, cf * cg);
    }
  return r;
}

// ---- monomials ----

LMonomials build_L(const TowerSpec& spec) {
  const int n = spec.n();
  LMonomials L{n, static_cast<std::size_t>(n), {}};
  for (int i = 0; i < n; ++i) {
    LMonomial m{Exponent(n, 0), Exponent(n, 0)};
    m.e[i] = -1;
    for (int j = 0; j < i; ++j) m.x[j] = -spec.c(j, i);
    L.m.push_back(std::move(m));
  }
  return L;
}

LMonomials build_M(const CartanMatrix& c, const Word& word, bool equivariant) {
  const int n = static_cast<int>(word.size());
  if (n > BitWord::kMaxLength) throw InvalidInput("word too long");
  for (int mu : word)
    if (mu < 0 || mu >= c.rank()) throw InvalidInput("word letter out of range");
  const std::size_t dim = equivariant ? c.rank() : 0;
  LMonomials M{n, dim, {}};
  for (int i = 0; i < n; ++i) {
    LMonomial m{Exponent(n, 0), Exponent(dim, 0)};
    if (equivariant) m.e[word[i]] = -1;
    for (int j = 0; j < i; ++j) m.x[j] = -c(word[j], word[i]);
    M.m.push_back(std::move(m));
  }
  return M;
}

RulePoly build_S(const BitWord& eps, std::size_t dim) {
  Exponent x(eps.n, 0);
  std::vector<int> z(eps.n, 0);
  for (int k = 0; k < eps.n; ++k) (eps.bit(k) ? z : x)[k] = 1;
  return RulePoly::monomial(x, z, CharPoly::constant(dim, 1));
}

RulePoly build_Q(const BitWord& eps, std::size_t dim) {
  const int n = eps.n;
  RulePoly q = RulePoly::constant(n, CharPoly::constant(dim, 1));
  for (int k = 0; k < n; ++k) {
    RulePoly::Key xk(2 * n, 0);
    xk[k] = 1;
    RulePoly f(n, dim);
    if (eps.bit(k)) {
      f.add_term(RulePoly::Key(2 * n, 0), CharPoly::constant(dim, 1));
      f.add_term(xk, CharPoly::constant(dim, -1));
    } else {
      f.add_term(xk, CharPoly::constant(dim, 1));
    }
    q = q * f;
  }
  return q;
}

// ---- R^eps ----

namespace {

using Work = std::map<RulePoly::Key, CharPoly>;

void accumulate(Work& w, const RulePoly::Key& k, CharPoly c) {
  if (c.is_zero()) return;
  auto [it, inserted] = w.try_emplace(k, std::move(c));
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) w.erase(it);
  }
}

/// Adds weight * coef * L^k * (monomial key) to out.
void add_power(Work& out, const RulePoly::Key& key, const CharPoly& coef, const LMonomial& L, int k,
               const Integer& weight) {
  RulePoly::Key nk = key;
  for (std::size_t j = 0; j < L.x.size(); ++j) nk[j] += k * L.x[j];
  CharPoly c = coef.shifted(scaled(L.e, k));
  c *= weight;
  accumulate(out, nk, std::move(c));
}

void check_ring(const LMonomials& L, int n, std::size_t dim) {
  if (L.n != n) throw InvalidInput("monomials and polynomial have different numbers of variables");
  if (L.dim != dim) throw InvalidInput("monomials and polynomial have different coefficient rings");
}

}  // namespace

CharPoly r_op(const LMonomials& L, const BitWord& eps, const RulePoly& p) {
  const int n = p.n();
  check_ring(L, n, p.dim());
  if (eps.n != n) throw InvalidInput("bit word length does not match the polynomial");

  // Indices outside pi_+ are only ever evaluated at X = 1, Z = 0; do it first,
  // in P and in every L_i.
  std::vector<LMonomial> Ls = L.m;
  for (auto& m : Ls)
    for (int j = 0; j < n; ++j)
      if (!eps.bit(j)) m.x[j] = 0;
  Work cur;
  for (const auto& [key, c] : p.terms()) {
    RulePoly::Key k = key;
    bool vanishes = false;
    for (int j = 0; j < n; ++j)
      if (!eps.bit(j)) {
        if (k[n + j] > 0) vanishes = true;
        k[j] = 0;
      }
    if (!vanishes) accumulate(cur, k, c);
  }

  auto plus = eps.plus();
  for (auto it = plus.rbegin(); it != plus.rend(); ++it) {
    const int i = *it;
    const LMonomial& Li = Ls[i];
    Work next;
    for (const auto& [key, coef] : cur) {
      const int r = key[i], s = key[n + i];
      RulePoly::Key base = key;
      base[i] = 0;
      base[n + i] = 0;
      if (s > 0) {
        // S (1 - L)^{s-1} L^r
        Integer binom;
        for (int t = 0; t <= s - 1; ++t) {
          mpz_bin_uiui(binom.get_mpz_t(), s - 1, t);
          add_power(next, base, coef, Li, r + t, (t % 2) ? Integer(-binom) : binom);
        }
      } else if (r > 1) {
        for (int k = 1; k <= r - 1; ++k) add_power(next, base, coef, Li, k, -1);
      } else if (r < 0) {
        for (int k = r; k <= 0; ++k) add_power(next, base, coef, Li, k, 1);
      } else if (r == 0) {
        accumulate(next, base, coef);
      }
      // r == 1, s == 0 contributes nothing
    }
    cur = std::move(next);
  }

  CharPoly out(p.dim());
  for (const auto& [key, c] : cur) {
    for (int v : key)
      if (v != 0) throw ConsistencyError("R^eps left an unreduced variable");
    out += c;
  }
  return out;
}

// ---- basis expansion ----

std::vector<CharPoly> expand_in_basis(const LMonomials& L, const RulePoly& p) {
  const int n = p.n();
  check_ring(L, n, p.dim());
  if (n > 20) throw InvalidInput("basis expansion is limited to 20 variables");

  // Z_i -> 1 - X_i
  Work xonly;
  for (const auto& [key, c] : p.terms()) {
    Work partial;
    RulePoly::Key k0 = key;
    for (int j = 0; j < n; ++j) k0[n + j] = 0;
    partial.emplace(k0, c);
    for (int j = 0; j < n; ++j) {
      const int z = key[n + j];
      if (z == 0) continue;
      Work nx;
      Integer binom;
      for (const auto& [k, cc] : partial)
        for (int t = 0; t <= z; ++t) {
          mpz_bin_uiui(binom.get_mpz_t(), z, t);
          RulePoly::Key kk = k;
          kk[j] += t;
          accumulate(nx, kk, cc * Integer((t % 2) ? Integer(-binom) : binom));
        }
      partial = std::move(nx);
    }
    for (auto& [k, cc] : partial) accumulate(xonly, k, std::move(cc));
  }

  // Reduce X_i^m = X_i + c_m(L_i) (1 - X_i) from the top index down.
  std::vector<std::pair<std::uint32_t, Work>> leaves;
  leaves.emplace_back(0u, std::move(xonly));
  for (int i = n - 1; i >= 0; --i) {
    std::vector<std::pair<std::uint32_t, Work>> next;
    next.reserve(2 * leaves.size());
    for (auto& [mask, poly] : leaves) {
      Work keep, flip;
      for (const auto& [key, coef] : poly) {
        const int m = key[i];
        RulePoly::Key base = key;
        base[i] = 0;
        accumulate(keep, base, coef);
        if (m > 1) {
          for (int k = 1; k <= m - 1; ++k) add_power(flip, base, coef, L.m[i], k, -1);
        } else if (m == 0) {
          accumulate(flip, base, coef);
        } else if (m < 0) {
          for (int k = m; k <= 0; ++k) add_power(flip, base, coef, L.m[i], k, 1);
        }
      }
      next.emplace_back(mask, std::move(keep));
      next.emplace_back(mask | (1u << i), std::move(flip));
    }
    leaves = std::move(next);
  }

  std::vector<CharPoly> out(std::size_t(1) << n, CharPoly(p.dim()));
  for (const auto& [mask, poly] : leaves)
    for (const auto& [key, c] : poly) {
      for (int v : key)
        if (v != 0) throw ConsistencyError("basis expansion left an unreduced variable");
      out[mask] += c;
    }
  return out;
}

}  // namespace eqkt
