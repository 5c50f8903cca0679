#include "eqkt/verify.hpp"

#include <functional>
#include <map>

#include "eqkt/bott_tower.hpp"
#include "eqkt/error.hpp"
#include "eqkt/flag_kt.hpp"
#include "eqkt/golden.hpp"
#include "eqkt/io.hpp"
#include "eqkt/kk_oracle.hpp"
#include "eqkt/random.hpp"
#include "eqkt/rule_engine.hpp"

namespace eqkt {

bool SuiteReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return !checks.empty();
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : checks) cs.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"suite", suite}, {"seed", seed}, {"passed", passed()}, {"checks", cs}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"a2-full", "b2", "g2", "towers", "theoP", "all"};
  return names;
}

namespace {

/// Runs body; a thrown error counts as a failure with its message.
CheckResult check(const std::string& name, const std::function<std::string()>& body) {
  try {
    std::string mismatch = body();
    return {name, mismatch.empty(), mismatch.empty() ? "ok" : mismatch};
  } catch (const std::exception& e) {
    return {name, false, std::string("error: ") + e.what()};
  }
}

std::string show(const Word& w) { return "[" + format_word(w) + "]"; }

Word zero_based(const std::vector<int>& w) {
  Word o;
  for (int k : w) o.push_back(k - 1);
  return o;
}

std::string expect_eq(const std::string& what, const CharPoly& got, const CharPoly& want, const Lattice& lat) {
  if (got == want) return "";
  return what + ": got " + canonical_string(got, lat) + ", expected " + canonical_string(want, lat);
}

// ---- flag checks ----

std::string golden_products(const CartanMatrix& c, const std::vector<golden::Product>& products,
                            unsigned threads) {
  WeylGroup g(c);
  const Lattice lat = Lattice::roots(c.rank());
  QTableOptions opt;
  opt.threads = threads;
  for (const auto& p : products) {
    WeylElt u = g.from_word(zero_based(p.u)), v = g.from_word(zero_based(p.v));
    std::map<WeylElt, CharPoly> want;
    for (const auto& t : p.terms) want.emplace(g.from_word(zero_based(t.w)), t.q);
    auto table = q_table(c, u, v, opt);
    std::map<WeylElt, CharPoly> got(table.begin(), table.end());
    std::string tag = "psi^" + show(u.word) + " psi^" + show(v.word);
    if (got.size() != want.size())
      return tag + ": " + std::to_string(got.size()) + " terms, expected " + std::to_string(want.size());
    for (const auto& [w, q] : want) {
      auto it = got.find(w);
      if (it == got.end()) return tag + ": missing term " + show(w.word);
      std::string m = expect_eq(tag + " at " + show(w.word), it->second, q, lat);
      if (!m.empty()) return m;
    }
  }
  return "";
}

std::string golden_values(const CartanMatrix& c, const std::vector<golden::Value>& values) {
  WeylGroup g(c);
  const Lattice lat = Lattice::roots(c.rank());
  for (const auto& val : values) {
    CharPoly q = q_const(c, g.from_word(zero_based(val.u)), g.from_word(zero_based(val.v)), zero_based(val.w));
    std::string m = expect_eq("q at " + show(zero_based(val.w)), q, val.q, lat);
    if (!m.empty()) return m;
  }
  return "";
}

/// q_const against the triangular solve for every (u, v) and every w of length <= max_len.
std::string oracle_equivalence(const CartanMatrix& c, int max_len, std::size_t* count) {
  WeylGroup g(c);
  const Lattice lat = Lattice::roots(c.rank());
  auto all = g.enumerate_group(10000, max_len);
  for (const auto& w : all) {
    PsiTable t = psi_table(c, w);
    const std::size_t iw = t.index_of(w);
    for (const auto& u : all)
      for (const auto& v : all) {
        CharPoly want(c.rank());
        std::size_t iu = t.index_of(u), iv = t.index_of(v);
        if (iu < t.elems.size() && iv < t.elems.size()) want = oracle_q_row(g, t, iu, iv)[iw];
        CharPoly got = q_const(c, u, v, w.word);
        ++*count;
        std::string m = expect_eq("q_{" + show(u.word) + "," + show(v.word) + "}^" + show(w.word), got, want, lat);
        if (!m.empty()) return m;
      }
  }
  return "";
}

std::string duality(const CartanMatrix& c, const Word& top) {
  WeylGroup g(c);
  DualityReport r = verify_duality(c, g.from_word(top));
  for (const auto& e : r.entries)
    if (!e.passed) return "D_" + show(e.v) + " psi^" + show(e.w) + " (1) = " + e.value;
  return "";
}

std::string structural(const CartanMatrix& c, int max_len, const std::vector<std::pair<Word, Word>>& same) {
  WeylGroup g(c);
  const Lattice lat = Lattice::roots(c.rank());
  auto all = g.enumerate_group(10000, max_len);
  for (const auto& w : all) {
    // diagonal
    CharPoly prod = CharPoly::constant(c.rank(), 1);
    for (const auto& beta : g.inversion_set(g.inverse(w))) prod *= CharPoly::one_minus(beta);
    std::string m = expect_eq("q_{w,w}^w for w = " + show(w.word), q_const(c, w, w, w.word), prod, lat);
    if (!m.empty()) return m;
    for (const auto& u : all)
      for (const auto& v : all) {
        if (v < u) continue;
        CharPoly a = q_const(c, u, v, w.word), b = q_const(c, v, u, w.word);
        if (a != b) return "symmetry fails at " + show(u.word) + "," + show(v.word) + "," + show(w.word);
        if (!a.is_zero() && (!g.bruhat_leq(u, w) || !g.bruhat_leq(v, w)))
          return "support fails at " + show(u.word) + "," + show(v.word) + "," + show(w.word);
      }
  }
  for (const auto& [w1, w2] : same) {
    WeylElt w = g.from_word(w1);
    if (!(w == g.from_word(w2))) return "words " + show(w1) + " and " + show(w2) + " differ";
    for (const auto& u : g.enumerate_interval(w))
      for (const auto& v : g.enumerate_interval(w)) {
        std::string m = expect_eq("word independence at " + show(u.word) + "," + show(v.word),
                                  q_const(c, u, v, w1), q_const(c, u, v, w2), lat);
        if (!m.empty()) return m;
      }
  }
  return "";
}

void flag_suite(SuiteReport& rep, const std::string& type, unsigned threads) {
  const CartanMatrix c = CartanMatrix::preset(type);
  if (type == "A2") {
    rep.checks.push_back(check("A2 golden products (21)", [&] { return golden_products(c, golden::a2_products(), threads); }));
    std::size_t n = 0;
    rep.checks.push_back(check("A2 oracle equivalence (all triples)", [&] { return oracle_equivalence(c, -1, &n); }));
    rep.checks.back().detail += " (" + std::to_string(n) + " triples)";
    rep.checks.push_back(check("A2 duality 6x6", [&] { return duality(c, {0, 1, 0}); }));
    rep.checks.push_back(check("A2 structural properties",
                               [&] { return structural(c, -1, {{{0, 1, 0}, {1, 0, 1}}}); }));
  } else if (type == "B2") {
    rep.checks.push_back(check("B2 golden values", [&] { return golden_values(c, golden::b2_values()); }));
    std::size_t n = 0;
    rep.checks.push_back(check("B2 oracle equivalence (length <= 4)", [&] { return oracle_equivalence(c, 4, &n); }));
    rep.checks.back().detail += " (" + std::to_string(n) + " triples)";
    rep.checks.push_back(check("B2 duality 8x8", [&] { return duality(c, {0, 1, 0, 1}); }));
    rep.checks.push_back(check("B2 structural properties",
                               [&] { return structural(c, 4, {{{0, 1, 0, 1}, {1, 0, 1, 0}}}); }));
  } else {
    rep.checks.push_back(check("G2 golden value", [&] { return golden_values(c, golden::g2_values()); }));
    rep.checks.push_back(check("G2 ordinary constant", [&]() -> std::string {
      WeylGroup g(c);
      Integer t = t_const(c, g.identity(), g.identity(), zero_based(golden::g2_t_word()));
      return t == golden::g2_t_value ? "" : "t = " + t.get_str();
    }));
    rep.checks.push_back(check("G2 monomial m_5", [&]() -> std::string {
      LMonomials m = build_M(c, zero_based(golden::g2_t_word()), false);
      return m.m[4].x == golden::g2_m5() ? "" : "unexpected exponents";
    }));
    std::size_t n = 0;
    rep.checks.push_back(check("G2 oracle equivalence (length <= 4)", [&] { return oracle_equivalence(c, 4, &n); }));
    rep.checks.back().detail += " (" + std::to_string(n) + " triples)";
    rep.checks.push_back(check("G2 duality (length <= 4 interval)", [&] { return duality(c, {0, 1, 0, 1}); }));
  }
}

// ---- tower checks ----

std::string hirzebruch() {
  TowerSpec spec(2, {{0, -1}, {0, 0}});
  auto want = golden::hirzebruch_matrix();
  const Lattice lat = spec.lattice();
  const std::vector<BitWord> order{BitWord::parse("00"), BitWord::parse("10"), BitWord::parse("01"),
                                   BitWord::parse("11")};
  for (int i = 0; i < 4; ++i) {
    FixedPointClass mu = restrict_basis_class(spec, order[i]);
    for (int j = 0; j < 4; ++j) {
      std::string m = expect_eq("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                                mu.at(order[j]), want[i][j], lat);
      if (!m.empty()) return m;
    }
  }
  return "";
}

std::string kronecker(Rng& rng, int specs) {
  for (int s = 0; s < specs; ++s) {
    TowerSpec spec = random_tower(rng, 4, 3);
    const auto eps_all = all_bitwords(spec.n());
    for (const auto& e : eps_all) {
      FixedPointClass mu = restrict_basis_class(spec, e);
      for (const auto& ep : eps_all) {
        CharPoly chi = chi_localized(spec, ep, mu);
        if (chi != CharPoly::constant(spec.n(), e == ep ? 1 : 0))
          return "spec " + spec.to_json().dump() + ": chi(" + ep.str() + ", mu_" + e.str() +
                 ") = " + canonical_string(chi, spec.lattice());
      }
    }
  }
  return "";
}

std::string tower_vs_localization(Rng& rng, int specs) {
  for (int s = 0; s < specs; ++s) {
    TowerSpec spec = random_tower(rng, 3, 2);
    const auto eps_all = all_bitwords(spec.n());
    for (const auto& e1 : eps_all)
      for (const auto& e2 : eps_all) {
        FixedPointClass prod = pointwise_product(restrict_basis_class(spec, e1), restrict_basis_class(spec, e2));
        for (const auto& e3 : eps_all) {
          std::string m = expect_eq("spec " + spec.to_json().dump() + " r_{" + e1.str() + "," + e2.str() + "}^" + e3.str(),
                                    tower_structure_const(spec, e1, e2, e3), chi_localized(spec, e3, prod),
                                    spec.lattice());
          if (!m.empty()) return m;
        }
      }
  }
  return "";
}

std::string theo_p(Rng& rng, int cases) {
  for (int k = 0; k < cases; ++k) {
    TowerSpec spec = random_tower(rng, 4, 3);
    LMonomials L = build_L(spec);
    RulePoly p = random_rule_poly(rng, spec.n(), spec.n());
    auto beta = expand_in_basis(L, p);
    for (const auto& e : all_bitwords(spec.n())) {
      std::string m = expect_eq("case " + std::to_string(k) + " at " + e.str(), r_op(L, e, p), beta[e.mask],
                                spec.lattice());
      if (!m.empty()) return m;
    }
  }
  return "";
}

}  // namespace

SuiteReport run_suite(const std::string& name, std::uint64_t seed, unsigned threads) {
  SuiteReport rep{name, seed, {}};
  bool known = false;
  auto want = [&](const std::string& s) {
    bool hit = name == s || name == "all";
    known = known || hit;
    return hit;
  };
  if (want("a2-full")) flag_suite(rep, "A2", threads);
  if (want("b2")) flag_suite(rep, "B2", threads);
  if (want("g2")) flag_suite(rep, "G2", threads);
  if (want("towers")) {
    Rng rng(seed);
    rep.checks.push_back(check("Hirzebruch restriction matrix", hirzebruch));
    rep.checks.push_back(check("localization delta, 20 random towers", [&] { return kronecker(rng, 20); }));
    rep.checks.push_back(check("tower constants vs localization, 10 random towers",
                               [&] { return tower_vs_localization(rng, 10); }));
    rep.checks.push_back(check("Bott-Samelson example vs localization", []() -> std::string {
      WordSpec ws(CartanMatrix::preset("A2"), {0, 1, 0});
      const BitWord e1 = BitWord::parse("100"), e2 = BitWord::parse("001"), top = BitWord::parse("111");
      CharPoly got = bs_structure_const(ws, e1, e2, top);
      TowerSpec spec = ws.tower();
      FixedPointClass prod = pointwise_product(restrict_basis_class(spec, e1), restrict_basis_class(spec, e2));
      return expect_eq("chi", got, ws.to_roots(chi_localized(spec, top, prod)), ws.lattice());
    }));
  }
  if (want("theoP")) {
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    rep.checks.push_back(check("basis expansion equals R^eps, 200 random polynomials", [&] { return theo_p(rng, 200); }));
  }
  if (!known) throw InvalidInput("unknown suite: " + name);
  return rep;
}

}  // namespace eqkt
