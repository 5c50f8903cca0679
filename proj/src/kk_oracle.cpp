#include "eqkt/kk_oracle.hpp"

#include <algorithm>

#include "eqkt/error.hpp"
#include "eqkt/flag_kt.hpp"

namespace eqkt {

std::size_t WeylFunction::index_of(const WeylElt& x) const {
  for (std::size_t k = 0; k < support.size(); ++k)
    if (support[k] == x) return k;
  return support.size();
}

const CharPoly& WeylFunction::at(const WeylElt& x) const {
  std::size_t k = index_of(x);
  if (k == support.size()) throw InvalidInput("point outside the support of the function");
  return values[k];
}

WeylFunction demazure_apply(const WeylGroup& g, const WeylFunction& f, int i) {
  WeylFunction out;
  for (std::size_t k = 0; k < f.support.size(); ++k) {
    const WeylElt& v = f.support[k];
    std::size_t j = f.index_of(g.times_simple(v, i));
    if (j == f.support.size()) continue;
    Exponent root = g.image_of_simple(v, i);  // v alpha_i
    CharPoly num = f.values[k] - f.values[j] * CharPoly::monomial(-root);
    out.support.push_back(v);
    out.values.push_back(exact_div(num, CharPoly::one_minus(-root)));
  }
  return out;
}

WeylFunction demazure_word(const WeylGroup& g, const WeylFunction& f, const Word& word) {
  WeylFunction h = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) h = demazure_apply(g, h, *it);
  return h;
}

std::size_t PsiTable::index_of(const WeylElt& x) const {
  for (std::size_t k = 0; k < elems.size(); ++k)
    if (elems[k] == x) return k;
  return elems.size();
}

WeylFunction PsiTable::row(std::size_t u) const { return WeylFunction{elems, values.at(u)}; }

PsiTable psi_table(const CartanMatrix& c, const WeylElt& top, std::size_t cap) {
  WeylGroup g(c);
  PsiTable t;
  t.elems = g.enumerate_interval(top, cap);
  const std::size_t n = t.elems.size();
  t.values.assign(n, std::vector<CharPoly>(n, CharPoly(c.rank())));
  for (std::size_t x = 0; x < n; ++x) {
    // one word of x serves every row
    const WordSpec ws(c, t.elems[x].word);
    const BitWord all = BitWord::ones(ws.n());
    for (const auto& eps : all_bitwords(ws.n())) {
      std::size_t u = t.index_of(ws.demazure_of(eps));
      if (u == n) throw ConsistencyError("Demazure product of a subword left the interval");
      t.values[u][x] += bs_restrict(ws, eps, all).star();
    }
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t x = 0; x < n; ++x)
      if (!t.values[u][x].is_zero() && !g.bruhat_leq(t.elems[u], t.elems[x]))
        throw ConsistencyError("psi table is not triangular");
  return t;
}

std::vector<CharPoly> oracle_q_row(const WeylGroup& g, const PsiTable& t, std::size_t u, std::size_t v) {
  const std::size_t n = t.elems.size();
  std::vector<CharPoly> q(n, CharPoly(g.rank()));
  // elems ascend by length, so every w~ < x is already solved
  for (std::size_t x = 0; x < n; ++x) {
    CharPoly rhs = t.values[u][x] * t.values[v][x];
    for (std::size_t w = 0; w < x; ++w)
      if (!q[w].is_zero() && !t.values[w][x].is_zero()) rhs -= q[w] * t.values[w][x];
    q[x] = exact_div(rhs, t.values[x][x]);
  }
  return q;
}

CharPoly oracle_q_const(const CartanMatrix& c, const WeylElt& u, const WeylElt& v, const WeylElt& w,
                        std::size_t cap) {
  WeylGroup g(c);
  if (!g.bruhat_leq(u, w) || !g.bruhat_leq(v, w)) return CharPoly(c.rank());
  PsiTable t = psi_table(c, w, cap);
  auto q = oracle_q_row(g, t, t.index_of(u), t.index_of(v));
  return q[t.index_of(w)];
}

bool DualityReport::all_passed() const { return failures() == 0; }

std::size_t DualityReport::failures() const {
  return std::count_if(entries.begin(), entries.end(), [](const DualityEntry& e) { return !e.passed; });
}

DualityReport verify_duality(const WeylGroup& g, const PsiTable& t) {
  DualityReport rep;
  const Lattice lat = Lattice::roots(g.rank());
  const WeylElt e = g.identity();
  for (std::size_t v = 0; v < t.elems.size(); ++v)
    for (std::size_t w = 0; w < t.elems.size(); ++w) {
      DualityEntry entry{t.elems[v].word, t.elems[w].word, false, ""};
      try {
        WeylFunction h = demazure_word(g, t.row(w), t.elems[v].word);
        CharPoly val = h.at(e);
        entry.value = canonical_string(val, lat);
        entry.passed = val == CharPoly::constant(g.rank(), v == w ? 1 : 0);
      } catch (const Error& ex) {
        entry.value = ex.what();
      }
      rep.entries.push_back(std::move(entry));
    }
  return rep;
}

DualityReport verify_duality(const CartanMatrix& c, const WeylElt& top, std::size_t cap) {
  WeylGroup g(c);
  return verify_duality(g, psi_table(c, top, cap));
}

}  // namespace eqkt
