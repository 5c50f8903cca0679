#include "eqkt/flag_kt.hpp"

#include <exception>
#include <thread>

#include "eqkt/error.hpp"
#include "eqkt/rule_engine.hpp"

namespace eqkt {

WordSpec::WordSpec(CartanMatrix c, Word word) : c_(std::move(c)), g_(c_), word_(std::move(word)) {
  if (static_cast<int>(word_.size()) > BitWord::kMaxLength) throw InvalidInput("word too long");
  for (int mu : word_)
    if (mu < 0 || mu >= c_.rank()) throw InvalidInput("word letter out of range");
}

TowerSpec WordSpec::tower() const {
  const int n = this->n();
  if (n == 0) throw InvalidInput("empty word has no tower");
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) c[j][k] = b(j, k);
  return TowerSpec(n, std::move(c));
}

Exponent WordSpec::to_roots(const Exponent& e) const {
  if (static_cast<int>(e.size()) != n()) throw InvalidInput("exponent length does not match the word");
  Exponent r(c_.rank(), 0);
  for (int j = 0; j < n(); ++j) r[word_[j]] += e[j];
  return r;
}

CharPoly WordSpec::to_roots(const CharPoly& f) const {
  CharPoly g(c_.rank());
  for (const auto& [e, c] : f.terms()) g.add_term(to_roots(e), c);
  return g;
}

WeylElt WordSpec::demazure_of(const BitWord& eps) const {
  if (eps.n != n()) throw InvalidInput("bit word length does not match the word");
  Word sub;
  for (int k : eps.plus()) sub.push_back(word_[k]);
  return g_.demazure_product(sub);
}

std::vector<RootVec> subword_roots(const WordSpec& ws, const BitWord& eps) {
  if (eps.n != ws.n()) throw InvalidInput("bit word length does not match the word");
  const WeylGroup& g = ws.group();
  WeylElt v = g.identity();
  std::vector<RootVec> out;
  for (int i = 0; i < ws.n(); ++i) {
    if (eps.bit(i)) v = g.times_simple(v, ws.word()[i]);
    out.push_back(g.image_of_simple(v, ws.word()[i]));
  }
  return out;
}

CharPoly bs_restrict(const WordSpec& ws, const BitWord& eps, const BitWord& at) {
  if (eps.n != ws.n() || at.n != ws.n()) throw InvalidInput("bit word length does not match the word");
  const std::size_t r = ws.cartan().rank();
  if (!eps.leq(at)) return CharPoly(r);
  auto roots = subword_roots(ws, at);
  Exponent unit(r, 0);
  for (int i : at.plus()) unit = unit + roots[i];
  CharPoly v = CharPoly::monomial(unit);
  for (int i : eps.plus()) v *= -CharPoly::one_minus(-roots[i]);
  return v;
}

std::vector<BitWord> subwords_by_demazure(const WordSpec& ws, const WeylElt& u) {
  std::vector<BitWord> out;
  for (const auto& eps : all_bitwords(ws.n()))
    if (ws.demazure_of(eps) == u) out.push_back(eps);
  return out;
}

CharPoly bs_structure_const(const WordSpec& ws, const BitWord& e1, const BitWord& e2, const BitWord& e3) {
  const std::size_t r = ws.cartan().rank();
  LMonomials M = build_M(ws.cartan(), ws.word(), true);
  return r_op(M, e3, build_S(e1, r) * build_S(e2, r));
}

namespace {

void require_reduced(const WeylGroup& g, const Word& w) {
  if (!g.is_reduced(w)) throw InvalidInput("the word for w is not reduced");
}

/// (sum_{dem(eps) = u} S_eps)(sum_{dem(eps') = v} S_eps')
RulePoly subword_product(const WordSpec& ws, const WeylElt& u, const WeylElt& v, std::size_t dim) {
  RulePoly su(ws.n(), dim), sv(ws.n(), dim);
  for (const auto& eps : all_bitwords(ws.n())) {
    WeylElt d = ws.demazure_of(eps);
    if (d == u) su += build_S(eps, dim);
    if (d == v) sv += build_S(eps, dim);
  }
  return su * sv;
}

}  // namespace

CharPoly q_const(const CartanMatrix& c, const WeylElt& u, const WeylElt& v, const Word& w_word) {
  return q_const_at(c, u, v, w_word, BitWord::ones(static_cast<int>(w_word.size()))).second;
}

std::pair<WeylElt, CharPoly> q_const_at(const CartanMatrix& c, const WeylElt& u, const WeylElt& v,
                                        const Word& w_word, const BitWord& e3) {
  WordSpec ws(c, w_word);
  require_reduced(ws.group(), w_word);
  if (e3.n != ws.n()) throw InvalidInput("bit word length does not match the word");
  const std::size_t r = c.rank();
  RulePoly p = subword_product(ws, u, v, r);
  LMonomials M = build_M(c, w_word, true);
  return {ws.demazure_of(e3), r_op(M, e3, p).star()};
}

std::vector<std::pair<WeylElt, CharPoly>> q_table(const CartanMatrix& c, const WeylElt& u, const WeylElt& v,
                                                  const QTableOptions& opt) {
  WeylGroup g(c);
  std::vector<WeylElt> ws = g.enumerate_group(opt.cap, opt.max_length.value_or(-1));
  std::vector<CharPoly> vals(ws.size(), CharPoly(c.rank()));

  const unsigned nthreads = std::max(1u, std::min<unsigned>(opt.threads, static_cast<unsigned>(ws.size())));
  std::vector<std::exception_ptr> errors(nthreads);
  auto work = [&](unsigned t) {
    try {
      for (std::size_t k = t; k < ws.size(); k += nthreads) {
        // q vanishes unless u <= w and v <= w
        if (!g.bruhat_leq(u, ws[k]) || !g.bruhat_leq(v, ws[k])) continue;
        vals[k] = q_const(c, u, v, ws[k].word);
      }
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };
  if (nthreads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<std::pair<WeylElt, CharPoly>> out;
  for (std::size_t k = 0; k < ws.size(); ++k)
    if (!vals[k].is_zero()) out.emplace_back(ws[k], std::move(vals[k]));
  return out;
}

Integer t_const_direct(const CartanMatrix& c, const WeylElt& u, const WeylElt& v, const Word& w_word) {
  WordSpec ws(c, w_word);
  require_reduced(ws.group(), w_word);
  RulePoly p = subword_product(ws, u, v, 0);
  LMonomials m = build_M(c, w_word, false);
  return r_op(m, BitWord::ones(ws.n()), p).augment();
}

Integer t_const(const CartanMatrix& c, const WeylElt& u, const WeylElt& v, const Word& w_word) {
  Integer via_q = q_const(c, u, v, w_word).augment();
  Integer direct = t_const_direct(c, u, v, w_word);
  if (via_q != direct)
    throw ConsistencyError("ordinary K-theory constant disagrees: augmentation gives " + via_q.get_str() +
                           ", direct computation gives " + direct.get_str());
  return direct;
}

CharPoly psi_restrict(const CartanMatrix& c, const WeylElt& u, const Word& w_word) {
  WordSpec ws(c, w_word);
  require_reduced(ws.group(), w_word);
  const BitWord top = BitWord::ones(ws.n());
  CharPoly out(c.rank());
  for (const auto& eps : subwords_by_demazure(ws, u)) out += bs_restrict(ws, eps, top).star();
  return out;
}

CharPoly psi_restrict(const CartanMatrix& c, const WeylElt& u, const WeylElt& w) {
  return psi_restrict(c, u, w.word);
}

}  // namespace eqkt
