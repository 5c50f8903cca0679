#include <doctest.h>

#include <set>

#include "eqkt/error.hpp"
#include "eqkt/flag_kt.hpp"
#include "eqkt/golden.hpp"
#include "eqkt/random.hpp"
#include "helpers.hpp"

using namespace eqkt;
using testing::R;
using testing::W;

namespace {

const CartanMatrix A2 = CartanMatrix::preset("A2");
const CartanMatrix B2 = CartanMatrix::preset("B2");
const CartanMatrix G2 = CartanMatrix::preset("G2");

WeylElt elt(const CartanMatrix& c, std::initializer_list<int> w) { return WeylGroup(c).from_word(W(w)); }

// chi(Gamma_top, f) summed over the fixed points with one common denominator,
// tangent weights from the Weyl action on the subword roots.
CharPoly bs_localize(const WordSpec& ws, const BitWord& top, const std::vector<CharPoly>& f) {
  const std::size_t r = ws.cartan().rank();
  std::vector<BitWord> pts;
  std::vector<CharPoly> den;
  for (const auto& e : all_bitwords(ws.n())) {
    if (!e.leq(top)) continue;
    auto roots = subword_roots(ws, e);
    CharPoly d = CharPoly::constant(r, 1);
    for (int i : top.plus()) d *= CharPoly::one_minus(roots[i]);
    pts.push_back(e);
    den.push_back(d);
  }
  CharPoly num(r), all = CharPoly::constant(r, 1);
  for (std::size_t a = 0; a < pts.size(); ++a) {
    all *= den[a];
    CharPoly t = f[pts[a].mask];
    for (std::size_t b = 0; b < pts.size(); ++b)
      if (b != a) t *= den[b];
    num += t;
  }
  return exact_div(num, all);
}

CharPoly diagonal(const WeylGroup& g, const WeylElt& w) {
  CharPoly p = CharPoly::constant(g.rank(), 1);
  for (const auto& b : g.inversion_set(g.inverse(w))) p *= CharPoly::one_minus(b);
  return p;
}

}  // namespace

TEST_CASE("word data") {
  WordSpec ws(A2, W({1, 2, 1}));
  CHECK(ws.b(0, 1) == -1);
  CHECK(ws.b(0, 2) == 2);
  TowerSpec t = ws.tower();
  CHECK(t.c(0, 1) == -1);
  CHECK(t.c(0, 2) == 2);
  CHECK(t.c(1, 2) == -1);
  WordSpec g(G2, W({2, 1}));
  CHECK(g.b(0, 1) == -3);  // a_{2,1}
  CHECK_THROWS_AS(WordSpec(A2, W({1, 3})), InvalidInput);
}

TEST_CASE("subword roots") {
  WordSpec ws(A2, W({1, 2, 1}));
  auto r = subword_roots(ws, BitWord::parse("111"));
  CHECK(r == std::vector<RootVec>{{-1, 0}, {-1, -1}, {0, -1}});
  auto z = subword_roots(ws, BitWord::parse("000"));
  CHECK(z == std::vector<RootVec>{{1, 0}, {0, 1}, {1, 0}});
}

TEST_CASE("subword roots match the tower weights") {
  Rng rng(17);
  for (const CartanMatrix* c : {&A2, &B2, &G2}) {
    for (int k = 0; k < 15; ++k) {
      Word w;
      const int len = uniform(rng, 1, 5);
      for (int i = 0; i < len; ++i) w.push_back(uniform(rng, 0, 1));
      WordSpec ws(*c, w);
      TowerSpec t = ws.tower();
      for (const auto& e : all_bitwords(len)) {
        auto roots = subword_roots(ws, e);
        for (int i = 0; i < len; ++i) CHECK(ws.to_roots(-lambda_eps(t, e, i)) == roots[i]);
        for (const auto& at : all_bitwords(len))
          CHECK(bs_restrict(ws, e, at) == ws.to_roots(restrict_basis_class(t, e).at(at)));
      }
    }
  }
}

TEST_CASE("Bott-Samelson restrictions") {
  WordSpec a1(CartanMatrix::preset("A1"), W({1}));
  CHECK(bs_restrict(a1, BitWord::parse("0"), BitWord::parse("1")) == R("e^{-a1}", 1));
  CHECK(bs_restrict(a1, BitWord::parse("0"), BitWord::parse("0")) == R("1", 1));
  CHECK(bs_restrict(a1, BitWord::parse("1"), BitWord::parse("0")).is_zero());
  CHECK(bs_restrict(a1, BitWord::parse("1"), BitWord::parse("1")) == R("1-e^{-a1}", 1));
  WordSpec ws(A2, W({1, 2, 1}));
  CHECK(bs_restrict(ws, BitWord::parse("110"), BitWord::parse("101")).is_zero());
}

TEST_CASE("subwords by Demazure product") {
  WordSpec ws(A2, W({1, 2, 1}));
  WeylGroup g(A2);
  auto strs = [](const std::vector<BitWord>& v) {
    std::vector<std::string> s;
    for (const auto& b : v) s.push_back(b.str());
    return s;
  };
  CHECK(strs(subwords_by_demazure(ws, g.identity())) == std::vector<std::string>{"000"});
  auto s1 = strs(subwords_by_demazure(ws, g.simple(0)));
  CHECK(std::set<std::string>(s1.begin(), s1.end()) == std::set<std::string>{"100", "001", "101"});
  CHECK(strs(subwords_by_demazure(ws, g.simple(1))) == std::vector<std::string>{"010"});
  std::size_t total = 0;
  for (const auto& u : g.enumerate_group()) total += subwords_by_demazure(ws, u).size();
  CHECK(total == 8);
}

TEST_CASE("Bott-Samelson structure constants") {
  WordSpec ws(A2, W({1, 2, 1}));
  const BitWord z = BitWord::zeros(3);
  CHECK(bs_structure_const(ws, z, z, z) == golden::ONE());
  // localized directly: -e^{-a1-a2} - e^{-2a1-2a2}
  CHECK(bs_structure_const(ws, BitWord::parse("100"), BitWord::parse("001"), BitWord::parse("111")) ==
        R("-e^{-a1-a2}-e^{-2*a1-2*a2}"));
  for (const auto& a : all_bitwords(3))
    for (const auto& b : all_bitwords(3))
      for (const auto& t : all_bitwords(3))
        if (!a.leq(t)) CHECK(bs_structure_const(ws, a, b, t).is_zero());
}

TEST_CASE("Bott-Samelson constants agree with localization") {
  struct Case {
    const CartanMatrix* c;
    Word w;
  };
  for (const auto& [c, w] : {Case{&A2, W({1, 2, 1})}, Case{&A2, W({1, 1, 2})}, Case{&B2, W({2, 1, 2})},
                             Case{&G2, W({1, 2, 1})}}) {
    WordSpec ws(*c, w);
    auto bw = all_bitwords(ws.n());
    for (const auto& a : bw)
      for (const auto& b : bw) {
        std::vector<CharPoly> f;
        for (const auto& at : bw) f.push_back(bs_restrict(ws, a, at) * bs_restrict(ws, b, at));
        for (const auto& t : bw) CHECK(bs_structure_const(ws, a, b, t) == bs_localize(ws, t, f));
      }
  }
}

TEST_CASE("structure constants q_{u,v}^w") {
  CHECK(q_const(A2, elt(A2, {}), elt(A2, {}), W({1})) == R("-e^{a1}"));
  CHECK(q_const(A2, elt(A2, {}), elt(A2, {}), W({1, 2})) == R("e^{a1+a2}+e^{2*a1+a2}"));
  CHECK(q_const(A2, elt(A2, {}), elt(A2, {}), W({1, 2, 1})) == R("-e^{2*a1+2*a2}"));
  CHECK(q_const(A2, elt(A2, {1}), elt(A2, {2}), W({1, 2})) == R("e^{2*a1+a2}"));
  CHECK(q_const(B2, WeylGroup(B2).identity(), WeylGroup(B2).identity(), W({})) == golden::ONE());
  auto check_values = [](const CartanMatrix& c, const std::vector<golden::Value>& vals) {
    WeylGroup g(c);
    for (const auto& v : vals) {
      Word u, x, w;
      for (int k : v.u) u.push_back(k - 1);
      for (int k : v.v) x.push_back(k - 1);
      for (int k : v.w) w.push_back(k - 1);
      CHECK(q_const(c, g.from_word(u), g.from_word(x), w) == v.q);
    }
  };
  check_values(B2, golden::b2_values());
  check_values(G2, golden::g2_values());
  CHECK_THROWS_AS(q_const(A2, elt(A2, {}), elt(A2, {}), W({1, 1})), InvalidInput);
}

TEST_CASE("reading off q at a smaller cell") {
  WeylGroup g(A2);
  auto [w, q] = q_const_at(A2, g.identity(), g.identity(), W({1, 2, 1}), BitWord::parse("100"));
  CHECK(w == g.simple(0));
  CHECK(q == R("-e^{a1}"));
  auto top = q_const_at(A2, g.identity(), g.simple(0), W({1, 2, 1}), BitWord::ones(3));
  CHECK(top.second == q_const(A2, g.identity(), g.simple(0), W({1, 2, 1})));

  // equal Demazure products give equal values, and match q_const on the canonical word
  for (const CartanMatrix* c : {&A2, &B2}) {
    WeylGroup h(*c);
    const Word w0 = h.enumerate_group().back().word;
    auto elems = h.enumerate_interval(h.from_word(w0));
    for (const auto& u : elems)
      for (const auto& v : elems)
        for (const auto& e3 : all_bitwords(static_cast<int>(w0.size()))) {
          auto [x, val] = q_const_at(*c, u, v, w0, e3);
          CHECK(val == q_const(*c, u, v, x.word));
        }
  }
}

TEST_CASE("structural properties") {
  for (const CartanMatrix* c : {&A2, &B2}) {
    WeylGroup g(*c);
    auto elems = g.enumerate_group(10000, 4);
    for (const auto& w : elems) {
      for (const auto& u : elems)
        for (const auto& v : elems) {
          CharPoly q = q_const(*c, u, v, w.word);
          CHECK(q == q_const(*c, v, u, w.word));
          if (!g.bruhat_leq(u, w) || !g.bruhat_leq(v, w)) CHECK(q.is_zero());
        }
      CHECK(q_const(*c, w, w, w.word) == diagonal(g, w));
    }
  }
  // two reduced words of the same element
  struct Case {
    const CartanMatrix* c;
    Word a, b;
  };
  for (const auto& [c, a, b] : {Case{&A2, W({1, 2, 1}), W({2, 1, 2})}, Case{&B2, W({1, 2, 1, 2}), W({2, 1, 2, 1})},
                                Case{&G2, W({1, 2, 1}), W({1, 2, 1})}}) {
    WeylGroup g(*c);
    REQUIRE(g.from_word(a) == g.from_word(b));
    auto elems = g.enumerate_interval(g.from_word(a));
    for (const auto& u : elems)
      for (const auto& v : elems) CHECK(q_const(*c, u, v, a) == q_const(*c, u, v, b));
  }
  // G2 w_0 has two reduced words, 121212 and 212121
  WeylGroup g(G2);
  auto el = g.enumerate_interval(g.from_word(W({1, 2, 1, 2, 1, 2})));
  for (std::size_t k = 0; k < el.size(); k += 3)
    CHECK(q_const(G2, el[k], el[(k * 5) % el.size()], W({1, 2, 1, 2, 1, 2})) ==
          q_const(G2, el[k], el[(k * 5) % el.size()], W({2, 1, 2, 1, 2, 1})));
}

TEST_CASE("q tables") {
  WeylGroup g(A2);
  auto t = q_table(A2, g.simple(0), g.simple(1));
  REQUIRE(t.size() == 3);
  CHECK(t[0].first.word == W({1, 2}));
  CHECK(t[0].second == R("e^{2*a1+a2}"));
  CHECK(t[1].first.word == W({2, 1}));
  CHECK(t[1].second == R("e^{a1+2*a2}"));
  CHECK(t[2].first.word == W({1, 2, 1}));
  CHECK(t[2].second == R("-e^{2*a1+2*a2}"));
  auto w0 = g.from_word(W({1, 2, 1}));
  auto sq = q_table(A2, w0, w0);
  REQUIRE(sq.size() == 1);
  CHECK(sq[0].second == R("1-e^{a1}") * R("1-e^{a2}") * R("1-e^{a1+a2}"));
  CHECK(q_table(A2, g.identity(), g.identity()).size() == 6);

  QTableOptions par;
  par.threads = 4;
  CHECK(q_table(B2, g.identity(), WeylGroup(B2).simple(0), par) ==
        q_table(B2, g.identity(), WeylGroup(B2).simple(0)));

  CartanMatrix affine = CartanMatrix::validate({{2, -2}, {-2, 2}});
  WeylGroup ga(affine);
  QTableOptions capped;
  capped.cap = 100;
  CHECK_THROWS_AS(q_table(affine, ga.identity(), ga.identity(), capped), CapExceeded);
  capped.max_length = 3;
  auto ta = q_table(affine, ga.identity(), ga.identity(), capped);
  CHECK(ta.size() == 7);
  CHECK(ta[1].second == R("-e^{a1}"));
}

TEST_CASE("ordinary K-theory constants") {
  WeylGroup g(G2);
  CHECK(t_const(G2, g.identity(), g.identity(), W({2, 1, 2, 1, 2})) == golden::g2_t_value);
  CHECK(t_const_direct(G2, g.identity(), g.identity(), W({2, 1, 2, 1, 2})) == golden::g2_t_value);
  WeylGroup a(A2);
  CHECK(t_const(A2, a.identity(), a.identity(), W({1})) == -1);
  for (const CartanMatrix* c : {&A2, &B2, &G2}) {
    WeylGroup h(*c);
    auto elems = h.enumerate_group();
    for (const auto& w : elems) {
      if (w.length() >= 1) CHECK(t_const(*c, w, w, w.word) == 0);
      for (const auto& u : elems) {
        CHECK(t_const_direct(*c, u, h.identity(), w.word) == q_const(*c, u, h.identity(), w.word).augment());
      }
    }
  }
}

TEST_CASE("restrictions psi^u(w)") {
  WeylGroup g(A2);
  CHECK(psi_restrict(A2, g.identity(), g.simple(0)) == R("e^{a1}"));
  CHECK(psi_restrict(A2, g.simple(0), g.simple(0)) == R("1-e^{a1}"));
  CHECK(psi_restrict(A2, g.simple(0), g.simple(1)).is_zero());
  for (const CartanMatrix* c : {&A2, &B2, &G2}) {
    WeylGroup h(*c);
    auto elems = h.enumerate_group();
    for (const auto& v : elems) {
      RootVec rho = h.rho_minus_w_rho(v);
      CHECK(psi_restrict(*c, h.identity(), v) == CharPoly::monomial(rho));
      CHECK(psi_restrict(*c, v, v) == diagonal(h, v));
      for (const auto& u : elems)
        if (!h.bruhat_leq(u, v)) CHECK(psi_restrict(*c, u, v).is_zero());
    }
  }
  WeylGroup b(B2);
  for (const auto& u : b.enumerate_group())
    CHECK(psi_restrict(B2, u, W({1, 2, 1, 2})) == psi_restrict(B2, u, W({2, 1, 2, 1})));
}
