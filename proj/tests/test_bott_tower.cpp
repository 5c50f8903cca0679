#include <doctest.h>

#include "eqkt/bott_tower.hpp"
#include "eqkt/error.hpp"
#include "eqkt/golden.hpp"
#include "eqkt/random.hpp"
#include "helpers.hpp"

using namespace eqkt;

namespace {

TowerSpec hirzebruch() { return TowerSpec(2, {{0, -1}, {0, 0}}); }

// sum over chains k < m_1 < ... < l with every m_s in pi_+(eps) of
// (-1)^{#steps} c_{k,m_1} c_{m_1,m_2} ... c_{m_t,l}
int chain_sum(const TowerSpec& t, const BitWord& eps, int k, int l) {
  std::vector<int> mids;
  for (int m = k + 1; m < l; ++m)
    if (eps.bit(m)) mids.push_back(m);
  int total = 0;
  for (std::uint32_t s = 0; s < (1u << mids.size()); ++s) {
    int prev = k, prod = 1, steps = 0;
    for (std::size_t a = 0; a < mids.size(); ++a)
      if (s >> a & 1) prod *= t.c(prev, mids[a]), prev = mids[a], ++steps;
    prod *= t.c(prev, l);
    ++steps;
    total += (steps % 2 ? -1 : 1) * prod;
  }
  return total;
}

// localization sum over eps' <= eps with one common denominator
CharPoly chi_common_denominator(const TowerSpec& t, const BitWord& eps, const FixedPointClass& cls) {
  const int n = t.n();
  std::vector<BitWord> pts;
  for (const auto& e : all_bitwords(n))
    if (e.leq(eps)) pts.push_back(e);
  std::vector<CharPoly> den;
  for (const auto& e : pts) {
    CharPoly d = CharPoly::constant(n, 1);
    for (int i : eps.plus()) d *= CharPoly::one_minus(-lambda_eps(t, e, i));
    den.push_back(d);
  }
  CharPoly num(n), all = CharPoly::constant(n, 1);
  for (std::size_t a = 0; a < pts.size(); ++a) {
    all *= den[a];
    CharPoly term = cls.at(pts[a]);
    for (std::size_t b = 0; b < pts.size(); ++b)
      if (b != a) term *= den[b];
    num += term;
  }
  return exact_div(num, all);
}

}  // namespace

TEST_CASE("tower JSON") {
  TowerSpec t = TowerSpec::from_json(nlohmann::json::parse(R"({"n":3,"c":{"1,2":-1,"2,3":4}})"));
  CHECK(t.n() == 3);
  CHECK(t.c(0, 1) == -1);
  CHECK(t.c(1, 2) == 4);
  CHECK(t.c(0, 2) == 0);
  CHECK(TowerSpec::from_json(t.to_json()).to_json() == t.to_json());
  CHECK_THROWS_AS(TowerSpec::from_json(nlohmann::json::parse(R"({"n":2,"c":{"2,1":1}})")), InvalidInput);
  CHECK_THROWS_AS(TowerSpec::from_json(nlohmann::json::parse(R"({"n":2,"c":{"1,3":1}})")), InvalidInput);
  CHECK_THROWS_AS(TowerSpec::from_json(nlohmann::json::parse(R"({"c":{}})")), InvalidInput);
}

TEST_CASE("c_{k,l}(eps)") {
  TowerSpec h = hirzebruch();
  for (const auto& e : all_bitwords(2)) CHECK(c_eps(h, e, 0, 1) == 1);
  TowerSpec t(3, {{0, 2, -3}, {0, 0, 5}, {0, 0, 0}});
  CHECK(c_eps(t, BitWord::parse("010"), 0, 2) == 3 + 5 * 2);
  CHECK(c_eps(t, BitWord::parse("101"), 0, 2) == 3);
  Rng rng(3);
  for (int k = 0; k < 50; ++k) {
    TowerSpec s = random_tower(rng, 5, 3);
    for (const auto& e : all_bitwords(s.n()))
      for (int a = 0; a < s.n(); ++a)
        for (int b = a + 1; b < s.n(); ++b) CHECK(c_eps(s, e, a, b) == chain_sum(s, e, a, b));
  }
}

TEST_CASE("weights and generator restrictions") {
  TowerSpec h = hirzebruch();
  auto L2 = restrict_generator(h, Generator::L, 1);
  CHECK(L2.at(BitWord::parse("11")) == testing::D("e^{-l1-l2}", 2));
  Rng rng(5);
  for (int k = 0; k < 20; ++k) {
    TowerSpec s = random_tower(rng, 4, 3);
    for (int i = 0; i < s.n(); ++i) {
      auto E = restrict_generator(s, Generator::E, i), F = restrict_generator(s, Generator::F, i),
           L = restrict_generator(s, Generator::L, i);
      for (const auto& e : all_bitwords(s.n())) {
        if (!e.bit(i)) {
          CHECK(E.at(e) == CharPoly::constant(s.n(), 1));
          CHECK(F.at(e).is_zero());
        }
        CHECK(E.at(e) + F.at(e) == CharPoly::constant(s.n(), 1));
        CHECK(E.at(e) * F.at(e) == (e.bit(i) ? CharPoly::monomial(-lambda_eps(s, e, i)) * F.at(e) : CharPoly(s.n())));
      }
    }
  }
}

TEST_CASE("basis classes at fixed points") {
  TowerSpec h = hirzebruch();
  auto M = golden::hirzebruch_matrix();
  const char* order[] = {"00", "10", "01", "11"};
  for (int i = 0; i < 4; ++i) {
    auto mu = restrict_basis_class(h, BitWord::parse(order[i]));
    for (int j = 0; j < 4; ++j) CHECK(mu.at(BitWord::parse(order[j])) == M[i][j]);
  }
  CHECK(restrict_basis_class(h, BitWord::parse("00")).at(BitWord::parse("11")) == testing::D("e^{-2*l1-l2}", 2));
  CHECK(restrict_basis_class(h, BitWord::parse("10")).at(BitWord::parse("01")).is_zero());

  // mu_eps is the product of F_i over pi_+(eps) and E_j over pi_-(eps)
  Rng rng(9);
  for (int k = 0; k < 20; ++k) {
    TowerSpec s = random_tower(rng, 4, 3);
    for (const auto& eps : all_bitwords(s.n())) {
      FixedPointClass prod{s.n(), std::vector<CharPoly>(1u << s.n(), CharPoly::constant(s.n(), 1))};
      for (int i = 0; i < s.n(); ++i)
        prod = pointwise_product(prod, restrict_generator(s, eps.bit(i) ? Generator::F : Generator::E, i));
      CHECK(prod == restrict_basis_class(s, eps));
    }
  }
}

TEST_CASE("weights lambda_i(eps)") {
  TowerSpec h = hirzebruch();
  CHECK(lambda_eps(h, BitWord::parse("00"), 0) == Exponent{-1, 0});
  CHECK(lambda_eps(h, BitWord::parse("00"), 1) == Exponent{0, -1});
  CHECK(lambda_eps(h, BitWord::parse("11"), 1) == Exponent{1, 1});
  CHECK(lambda_eps(h, BitWord::parse("10"), 1) == Exponent{-1, -1});
  CHECK(lambda_eps(h, BitWord::parse("10"), 0) == Exponent{1, 0});
}

TEST_CASE("L_i is e^{-lambda_i} times powers of the E_j") {
  Rng rng(13);
  for (int k = 0; k < 30; ++k) {
    TowerSpec s = random_tower(rng, 4, 3);
    const int n = s.n();
    for (int i = 0; i < n; ++i) {
      auto L = restrict_generator(s, Generator::L, i);
      for (const auto& e : all_bitwords(n)) {
        Exponent expo(n, 0);
        expo[i] = -1;
        for (int j = 0; j < i; ++j) {
          const CharPoly ej = restrict_generator(s, Generator::E, j).at(e);
          REQUIRE(ej.size() == 1);
          REQUIRE(ej.terms().begin()->second == 1);
          expo = expo + scaled(ej.terms().begin()->first, -s.c(j, i));
        }
        CHECK(L.at(e) == CharPoly::monomial(expo));
      }
    }
  }
}

TEST_CASE("Kronecker delta for basis classes") {
  Rng rng(21);
  for (int k = 0; k < 15; ++k) {
    TowerSpec s = random_tower(rng, 4, 3);
    for (const auto& a : all_bitwords(s.n())) {
      auto mu = restrict_basis_class(s, a);
      for (const auto& b : all_bitwords(s.n()))
        CHECK(chi_localized(s, b, mu) == CharPoly::constant(s.n(), a == b ? 1 : 0));
    }
  }
}

TEST_CASE("localization agrees with a single common denominator") {
  Rng rng(33);
  for (int k = 0; k < 15; ++k) {
    TowerSpec s = random_tower(rng, 3, 2);
    const int n = s.n();
    for (int trial = 0; trial < 4; ++trial) {
      BitWord a(n, uniform(rng, 0, (1 << n) - 1)), b(n, uniform(rng, 0, (1 << n) - 1));
      auto cls = pointwise_product(restrict_basis_class(s, a), restrict_basis_class(s, b));
      for (const auto& top : all_bitwords(n)) CHECK(chi_localized(s, top, cls) == chi_common_denominator(s, top, cls));
    }
  }
}

TEST_CASE("a function that is not a class is rejected") {
  TowerSpec s(1, {{0}});
  FixedPointClass f{1, {CharPoly::constant(1, 1), CharPoly(1)}};
  CHECK_THROWS_AS(chi_localized(s, BitWord::parse("1"), f), InexactDivision);
}

TEST_CASE("tower structure constants") {
  TowerSpec h = hirzebruch();
  const BitWord z = BitWord::parse("00"), a = BitWord::parse("10"), b = BitWord::parse("01"), t = BitWord::parse("11");
  CHECK(tower_structure_const(h, z, z, z) == CharPoly::constant(2, 1));
  CHECK(tower_structure_const(h, z, z, t) ==
        chi_localized(h, t, pointwise_product(restrict_basis_class(h, z), restrict_basis_class(h, z))));
  CHECK(tower_structure_const(h, a, b, t) ==
        chi_localized(h, t, pointwise_product(restrict_basis_class(h, a), restrict_basis_class(h, b))));

  Rng rng(41);
  for (int k = 0; k < 10; ++k) {
    TowerSpec s = random_tower(rng, 3, 3);
    auto bw = all_bitwords(s.n());
    for (const auto& e1 : bw)
      for (const auto& e2 : bw)
        for (const auto& e3 : bw) {
          CharPoly r = tower_structure_const(s, e1, e2, e3);
          CHECK(r == tower_structure_const(s, e2, e1, e3));
          if (!e1.leq(e3) || !e2.leq(e3)) CHECK(r.is_zero());
        }
  }
}
