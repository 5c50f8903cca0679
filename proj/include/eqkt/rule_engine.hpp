#pragma once

// The algebra R[X_1^{+-1}..X_N^{+-1}, Z_1..Z_N] over a character ring, the
// monomials L_i / M_i, the polynomials S_eps and Q_eps, the operator R^eps
// and the expansion in the basis {Q_eps}.

#include <map>
#include <vector>

#include "eqkt/bitword.hpp"
#include "eqkt/char_ring.hpp"
#include "eqkt/root_weyl.hpp"

namespace eqkt {

class TowerSpec;

/// Sparse polynomial sum coef * X^x Z^z. Keys are x (length N) followed by
/// z (length N, entries >= 0).
class RulePoly {
 public:
  using Key = std::vector<int>;

  RulePoly(int n = 0, std::size_t dim = 0) : n_(n), dim_(dim) {}

  static RulePoly constant(int n, const CharPoly& c);
  static RulePoly monomial(const Exponent& x, const std::vector<int>& z, const CharPoly& c);

  int n() const { return n_; }
  std::size_t dim() const { return dim_; }
  const std::map<Key, CharPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Key& key, const CharPoly& c);

  RulePoly& operator+=(const RulePoly& g);
  RulePoly& operator-=(const RulePoly& g);
  friend RulePoly operator+(RulePoly f, const RulePoly& g) { return f += g; }
  friend RulePoly operator-(RulePoly f, const RulePoly& g) { return f -= g; }
  friend RulePoly operator*(const RulePoly& f, const RulePoly& g);
  friend bool operator==(const RulePoly&, const RulePoly&) = default;

 private:
  void check(const RulePoly& g) const;

  int n_;
  std::size_t dim_;
  std::map<Key, CharPoly> terms_;
};

/// e^{e} * prod_j X_j^{x_j}, with x_j = 0 for j >= i.
struct LMonomial {
  Exponent x;
  Exponent e;
  bool operator==(const LMonomial&) const = default;
};

struct LMonomials {
  int n = 0;
  std::size_t dim = 0;
  std::vector<LMonomial> m;
};

/// L_i = e^{-lambda_i} prod_{j<i} X_j^{-c_{j,i}}
LMonomials build_L(const TowerSpec& spec);
/// M_i = e^{-mu_i} prod_{j<i} X_j^{-b_{j,i}}, b_{j,i} = a_{mu_j, mu_i}. Without
/// `equivariant` the character factor is dropped and the coefficient ring is Z.
LMonomials build_M(const CartanMatrix& c, const Word& word, bool equivariant = true);

/// S_eps = prod_{eps_i = 0} X_i prod_{eps_j = 1} Z_j, coefficient 1 in a lattice of rank dim.
RulePoly build_S(const BitWord& eps, std::size_t dim);
/// Q_eps = prod_{eps_i = 0} X_i prod_{eps_j = 1} (1 - X_j)
RulePoly build_Q(const BitWord& eps, std::size_t dim);

/// R^eps(P)
CharPoly r_op(const LMonomials& L, const BitWord& eps, const RulePoly& p);

/// Coefficients beta_eps(P) of P in the basis {Q_eps}, indexed by mask.
std::vector<CharPoly> expand_in_basis(const LMonomials& L, const RulePoly& p);

}  // namespace eqkt
