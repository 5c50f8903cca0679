#pragma once

// Independent check of the flag constants: Demazure operators on tables of
// restrictions, the duality D_v(psi^w)(1) = delta_{v,w}, and q_{u,v}^w by an
// exact triangular solve of psi^u psi^v = sum_w q_{u,v}^w psi^w.

#include <map>
#include <string>
#include <vector>

#include "eqkt/char_ring.hpp"
#include "eqkt/root_weyl.hpp"

namespace eqkt {

/// A function on a downward closed set of Weyl group elements.
struct WeylFunction {
  std::vector<WeylElt> support;
  std::vector<CharPoly> values;  // aligned with support

  std::size_t index_of(const WeylElt& x) const;  // npos-like: support.size() when absent
  bool contains(const WeylElt& x) const { return index_of(x) < support.size(); }
  const CharPoly& at(const WeylElt& x) const;
};

/// (D_i f)(v) = (f(v) - f(v s_i) e^{-v alpha_i}) / (1 - e^{-v alpha_i}) on
/// {v : v, v s_i in support}. Throws InexactDivision when f is not in Psi.
WeylFunction demazure_apply(const WeylGroup& g, const WeylFunction& f, int i);

/// D_v f = D_{i_1} ... D_{i_l} f for the canonical word of v.
WeylFunction demazure_word(const WeylGroup& g, const WeylFunction& f, const Word& word);

/// values[u][v] = psi^u(v) for u, v in the interval below `top`.
struct PsiTable {
  std::vector<WeylElt> elems;  // sorted by length, then word
  std::vector<std::vector<CharPoly>> values;

  std::size_t index_of(const WeylElt& x) const;
  /// psi^u as a function on the interval.
  WeylFunction row(std::size_t u) const;
};

/// Built from the subword formula; throws ConsistencyError if the table is
/// not upper triangular for the Bruhat order.
PsiTable psi_table(const CartanMatrix& c, const WeylElt& top, std::size_t cap = 10000);

/// Coefficients q_{u,v}^x for every x in the table.
std::vector<CharPoly> oracle_q_row(const WeylGroup& g, const PsiTable& t, std::size_t u, std::size_t v);

CharPoly oracle_q_const(const CartanMatrix& c, const WeylElt& u, const WeylElt& v, const WeylElt& w,
                        std::size_t cap = 10000);

struct DualityEntry {
  Word v, w;
  bool passed = false;
  std::string value;  // canonical form of D_v(psi^w)(1), or the error text
};

struct DualityReport {
  std::vector<DualityEntry> entries;
  bool all_passed() const;
  std::size_t failures() const;
};

DualityReport verify_duality(const WeylGroup& g, const PsiTable& t);
DualityReport verify_duality(const CartanMatrix& c, const WeylElt& top, std::size_t cap = 10000);

}  // namespace eqkt
