#pragma once

// Bott-Samelson restrictions and structure constants, structure constants
// q_{u,v}^w of the flag variety in the basis psi^w, the ordinary K-theory
// integers t_{u,v}^w, and the subword formula for psi^u(w).

#include <optional>
#include <utility>
#include <vector>

#include "eqkt/bitword.hpp"
#include "eqkt/bott_tower.hpp"
#include "eqkt/char_ring.hpp"
#include "eqkt/root_weyl.hpp"

namespace eqkt {

/// A word mu_1..mu_N of simple roots over a Cartan matrix.
class WordSpec {
 public:
  WordSpec(CartanMatrix c, Word word);

  const CartanMatrix& cartan() const { return c_; }
  const WeylGroup& group() const { return g_; }
  const Word& word() const { return word_; }
  int n() const { return static_cast<int>(word_.size()); }
  Lattice lattice() const { return Lattice::roots(c_.rank()); }

  /// b_{i,j} = a_{mu_i, mu_j}, 0-based
  int b(int i, int j) const { return c_(word_[i], word_[j]); }
  /// The tower with c_{j,k} = a_{mu_j, mu_k}.
  TowerSpec tower() const;

  /// lambda_j -> mu_j, from characters of the tower to characters of T.
  Exponent to_roots(const Exponent& e) const;
  CharPoly to_roots(const CharPoly& f) const;

  /// Demazure product of the subword selected by eps.
  WeylElt demazure_of(const BitWord& eps) const;

 private:
  CartanMatrix c_;
  WeylGroup g_;
  Word word_;
};

/// alpha_i(eps) = v_i(eps) mu_i, v_i(eps) = prod_{k <= i, eps_k = 1} s_{mu_k}
std::vector<RootVec> subword_roots(const WordSpec& ws, const BitWord& eps);

/// mu_eps at the fixed point `at`.
CharPoly bs_restrict(const WordSpec& ws, const BitWord& eps, const BitWord& at);

/// All eps whose Demazure product is u, in mask order.
std::vector<BitWord> subwords_by_demazure(const WordSpec& ws, const WeylElt& u);

/// chi(Gamma_{e3}, mu_{e1} mu_{e2})
CharPoly bs_structure_const(const WordSpec& ws, const BitWord& e1, const BitWord& e2, const BitWord& e3);

/// q_{u,v}^w for the reduced word w_word.
CharPoly q_const(const CartanMatrix& c, const WeylElt& u, const WeylElt& v, const Word& w_word);

/// (Demazure product of e3, q_{u,v}^{that element}) read off at the cell e3.
std::pair<WeylElt, CharPoly> q_const_at(const CartanMatrix& c, const WeylElt& u, const WeylElt& v,
                                        const Word& w_word, const BitWord& e3);

struct QTableOptions {
  std::size_t cap = 10000;
  std::optional<int> max_length;  // required when W is infinite
  unsigned threads = 1;
};

/// Nonzero q_{u,v}^w over all w (up to max_length), ordered by length then word.
std::vector<std::pair<WeylElt, CharPoly>> q_table(const CartanMatrix& c, const WeylElt& u, const WeylElt& v,
                                                  const QTableOptions& opt = {});

/// t_{u,v}^w in ordinary K-theory from the integer operator with the e-free monomials.
Integer t_const_direct(const CartanMatrix& c, const WeylElt& u, const WeylElt& v, const Word& w_word);
/// t_{u,v}^w, computed by augmentation of q and directly; throws ConsistencyError on disagreement.
Integer t_const(const CartanMatrix& c, const WeylElt& u, const WeylElt& v, const Word& w_word);

/// psi^u(w) through the canonical reduced word of w.
CharPoly psi_restrict(const CartanMatrix& c, const WeylElt& u, const WeylElt& w);
/// Same through a chosen reduced word of w.
CharPoly psi_restrict(const CartanMatrix& c, const WeylElt& u, const Word& w_word);

}  // namespace eqkt
