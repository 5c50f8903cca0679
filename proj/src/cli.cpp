#include "eqkt/cli.hpp"

#include <algorithm>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "eqkt/bott_tower.hpp"
#include "eqkt/error.hpp"
#include "eqkt/flag_kt.hpp"
#include "eqkt/io.hpp"
#include "eqkt/kk_oracle.hpp"
#include "eqkt/verify.hpp"

namespace eqkt {

namespace {

using nlohmann::json;

struct Options {
  std::string cartan = "A2";
  std::string u, v, w, word, tower;
  std::string e1, e2, e3, at;
  std::string output = "text";
  bool json_flag = false;
  bool check = false;
  std::string suite = "all";
  std::uint64_t seed = 20240601;
  unsigned threads = 1;
  std::size_t cap = 10000;
  std::optional<int> max_length;

  bool as_json() const { return json_flag || output == "json"; }
};

json poly_json(const CharPoly& f, const Lattice& lat) {
  return {{"text", canonical_string(f, lat)}, {"terms", to_json(f)}};
}

json integer_json(const Integer& n) {
  if (n.fits_slong_p()) return static_cast<long long>(n.get_si());
  return n.get_str();
}

std::string bracket(const Word& w) { return "[" + format_word(w) + "]"; }

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int cmd_qconst(const Options& o, std::ostream& out) {
  CartanMatrix c = parse_cartan(o.cartan);
  WeylGroup g(c);
  WeylElt u = g.from_word(parse_word(o.u, c.rank()));
  WeylElt v = g.from_word(parse_word(o.v, c.rank()));
  Word w = parse_word(o.w, c.rank());
  const Lattice lat = Lattice::roots(c.rank());
  if (!o.e3.empty()) {
    BitWord e3 = parse_bitword(o.e3, static_cast<int>(w.size()));
    auto [x, q] = q_const_at(c, u, v, w, e3);
    if (o.as_json())
      emit(out, {{"command", "qconst"}, {"cartan", cartan_to_json(c)}, {"u", word_to_json(u.word)},
                 {"v", word_to_json(v.word)}, {"w", word_to_json(w)}, {"e3", e3.str()},
                 {"element", word_to_json(x.word)}, {"value", poly_json(q, lat)}});
    else
      out << bracket(x.word) << " " << canonical_string(q, lat) << "\n";
    return kOk;
  }
  CharPoly q = q_const(c, u, v, w);
  if (o.as_json())
    emit(out, {{"command", "qconst"}, {"cartan", cartan_to_json(c)}, {"u", word_to_json(u.word)},
               {"v", word_to_json(v.word)}, {"w", word_to_json(w)}, {"value", poly_json(q, lat)}});
  else
    out << canonical_string(q, lat) << "\n";
  return kOk;
}

int cmd_qtable(const Options& o, std::ostream& out) {
  CartanMatrix c = parse_cartan(o.cartan);
  WeylGroup g(c);
  WeylElt u = g.from_word(parse_word(o.u, c.rank()));
  WeylElt v = g.from_word(parse_word(o.v, c.rank()));
  QTableOptions opt;
  opt.cap = o.cap;
  opt.max_length = o.max_length;
  opt.threads = o.threads;
  auto table = q_table(c, u, v, opt);
  const Lattice lat = Lattice::roots(c.rank());
  if (o.as_json()) {
    json terms = json::array();
    for (const auto& [w, q] : table) terms.push_back({{"w", word_to_json(w.word)}, {"value", poly_json(q, lat)}});
    emit(out, {{"command", "qtable"}, {"cartan", cartan_to_json(c)}, {"u", word_to_json(u.word)},
               {"v", word_to_json(v.word)}, {"cap", o.cap},
               {"max_length", o.max_length ? json(*o.max_length) : json(nullptr)}, {"terms", terms}});
  } else {
    if (o.max_length) out << "# l(w) <= " << *o.max_length << "\n";
    for (const auto& [w, q] : table) out << bracket(w.word) << " " << canonical_string(q, lat) << "\n";
  }
  return kOk;
}

int cmd_tconst(const Options& o, std::ostream& out) {
  CartanMatrix c = parse_cartan(o.cartan);
  WeylGroup g(c);
  WeylElt u = g.from_word(parse_word(o.u, c.rank()));
  WeylElt v = g.from_word(parse_word(o.v, c.rank()));
  Word w = parse_word(o.w, c.rank());
  Integer t = t_const(c, u, v, w);
  if (o.as_json())
    emit(out, {{"command", "tconst"}, {"cartan", cartan_to_json(c)}, {"u", word_to_json(u.word)},
               {"v", word_to_json(v.word)}, {"w", word_to_json(w)}, {"value", integer_json(t)}});
  else
    out << t.get_str() << "\n";
  return kOk;
}

int cmd_rconst(const Options& o, std::ostream& out, std::ostream& err) {
  TowerSpec spec = parse_tower(o.tower);
  BitWord e1 = parse_bitword(o.e1, spec.n()), e2 = parse_bitword(o.e2, spec.n()),
          e3 = parse_bitword(o.e3, spec.n());
  CharPoly r = tower_structure_const(spec, e1, e2, e3);
  const Lattice lat = spec.lattice();
  if (o.check) {
    FixedPointClass prod = pointwise_product(restrict_basis_class(spec, e1), restrict_basis_class(spec, e2));
    CharPoly chi = chi_localized(spec, e3, prod);
    if (chi != r) {
      err << "rule engine gives " << canonical_string(r, lat) << ", localization gives "
          << canonical_string(chi, lat) << "\n";
      return kInconsistent;
    }
  }
  if (o.as_json())
    emit(out, {{"command", "rconst"}, {"tower", spec.to_json()}, {"e1", e1.str()}, {"e2", e2.str()},
               {"e3", e3.str()}, {"checked", o.check}, {"value", poly_json(r, lat)}});
  else
    out << canonical_string(r, lat) << "\n";
  return kOk;
}

int cmd_bsconst(const Options& o, std::ostream& out) {
  CartanMatrix c = parse_cartan(o.cartan);
  WordSpec ws(c, parse_word(o.word, c.rank()));
  BitWord e1 = parse_bitword(o.e1, ws.n()), e2 = parse_bitword(o.e2, ws.n()), e3 = parse_bitword(o.e3, ws.n());
  CharPoly r = bs_structure_const(ws, e1, e2, e3);
  const Lattice lat = ws.lattice();
  if (o.as_json())
    emit(out, {{"command", "bsconst"}, {"cartan", cartan_to_json(c)}, {"word", word_to_json(ws.word())},
               {"e1", e1.str()}, {"e2", e2.str()}, {"e3", e3.str()}, {"value", poly_json(r, lat)}});
  else
    out << canonical_string(r, lat) << "\n";
  return kOk;
}

int cmd_restrict(const Options& o, std::ostream& out) {
  // tower mode with --tower, Bott-Samelson mode with --word
  std::vector<std::pair<BitWord, CharPoly>> rows;
  Lattice lat;
  json source;
  if (!o.tower.empty()) {
    TowerSpec spec = parse_tower(o.tower);
    BitWord e = parse_bitword(o.e1, spec.n());
    FixedPointClass mu = restrict_basis_class(spec, e);
    for (const auto& at : all_bitwords(spec.n())) rows.emplace_back(at, mu.at(at));
    lat = spec.lattice();
    source = {{"tower", spec.to_json()}};
  } else {
    CartanMatrix c = parse_cartan(o.cartan);
    WordSpec ws(c, parse_word(o.word, c.rank()));
    BitWord e = parse_bitword(o.e1, ws.n());
    for (const auto& at : all_bitwords(ws.n())) rows.emplace_back(at, bs_restrict(ws, e, at));
    lat = ws.lattice();
    source = {{"cartan", cartan_to_json(c)}, {"word", word_to_json(ws.word())}};
  }
  if (!o.at.empty()) {
    BitWord at = parse_bitword(o.at, rows.front().first.n);
    rows = {rows[at.mask]};
  }
  if (o.as_json()) {
    json vals = json::array();
    for (const auto& [at, f] : rows) vals.push_back({{"at", at.str()}, {"value", poly_json(f, lat)}});
    json j = {{"command", "restrict"}, {"e1", o.e1}, {"values", vals}};
    j.update(source);
    emit(out, j);
  } else {
    for (const auto& [at, f] : rows) out << at.str() << " " << canonical_string(f, lat) << "\n";
  }
  return kOk;
}

int cmd_psitable(const Options& o, std::ostream& out) {
  CartanMatrix c = parse_cartan(o.cartan);
  WeylGroup g(c);
  WeylElt top = g.from_word(parse_word(o.w, c.rank()));
  PsiTable t = psi_table(c, top, o.cap);
  const Lattice lat = Lattice::roots(c.rank());
  if (o.as_json()) {
    json elems = json::array(), rows = json::array();
    for (const auto& x : t.elems) elems.push_back(word_to_json(x.word));
    for (const auto& row : t.values) {
      json r = json::array();
      for (const auto& f : row) r.push_back(poly_json(f, lat));
      rows.push_back(r);
    }
    emit(out, {{"command", "psitable"}, {"cartan", cartan_to_json(c)}, {"top", word_to_json(top.word)},
               {"elements", elems}, {"values", rows}});
  } else {
    for (std::size_t u = 0; u < t.elems.size(); ++u)
      for (std::size_t x = 0; x < t.elems.size(); ++x)
        if (!t.values[u][x].is_zero())
          out << bracket(t.elems[u].word) << " " << bracket(t.elems[x].word) << " "
              << canonical_string(t.values[u][x], lat) << "\n";
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  SuiteReport rep = run_suite(o.suite, o.seed, o.threads);
  if (o.as_json()) {
    emit(out, rep.to_json());
  } else {
    for (const auto& c : rep.checks) out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
    out << (rep.passed() ? "all checks passed" : "some checks failed") << " (suite " << rep.suite << ", seed "
        << rep.seed << ")\n";
  }
  return rep.passed() ? kOk : kInconsistent;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Structure constants in equivariant K-theory of Bott towers, Bott-Samelson and flag varieties", "eqkt"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* s) {
    s->add_option("--output", o.output, "text or json")->check(CLI::IsMember({"text", "json"}));
    s->add_flag("--json", o.json_flag, "same as --output json");
    s->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1u, 256u));
  };
  auto add_cartan = [&](CLI::App* s) {
    s->add_option("--cartan", o.cartan, "A1, A2, A3, B2, G2, @file.json or inline JSON");
  };
  auto add_uv = [&](CLI::App* s) {
    s->add_option("--u", o.u, "word for u, e.g. \"1 2\" (empty = identity)");
    s->add_option("--v", o.v, "word for v");
  };

  auto* qconst = app.add_subcommand("qconst", "q_{u,v}^w for a reduced word of w");
  add_cartan(qconst);
  add_uv(qconst);
  qconst->add_option("--w", o.w, "reduced word of w")->required();
  qconst->add_option("--e3", o.e3, "read the coefficient at this cell instead of the top one");
  add_common(qconst);

  auto* qtable = app.add_subcommand("qtable", "all nonzero q_{u,v}^w");
  add_cartan(qtable);
  add_uv(qtable);
  qtable->add_option("--cap", o.cap, "maximum number of group elements");
  qtable->add_option("--max-length", o.max_length, "only w with l(w) <= this");
  add_common(qtable);

  auto* tconst = app.add_subcommand("tconst", "t_{u,v}^w in ordinary K-theory");
  add_cartan(tconst);
  add_uv(tconst);
  tconst->add_option("--w", o.w, "reduced word of w")->required();
  add_common(tconst);

  auto* rconst = app.add_subcommand("rconst", "r_{e1,e2}^{e3} for a Bott tower");
  rconst->add_option("--tower", o.tower, "{\"n\":2,\"c\":{\"1,2\":-1}} or @file.json")->required();
  rconst->add_option("--e1", o.e1)->required();
  rconst->add_option("--e2", o.e2)->required();
  rconst->add_option("--e3", o.e3)->required();
  rconst->add_flag("--check", o.check, "compare with the localization formula");
  add_common(rconst);

  auto* bsconst = app.add_subcommand("bsconst", "Bott-Samelson structure constant");
  add_cartan(bsconst);
  bsconst->add_option("--word", o.word, "word of simple roots")->required();
  bsconst->add_option("--e1", o.e1)->required();
  bsconst->add_option("--e2", o.e2)->required();
  bsconst->add_option("--e3", o.e3)->required();
  add_common(bsconst);

  auto* restrict_cmd = app.add_subcommand("restrict", "fixed point restrictions of a basis class");
  add_cartan(restrict_cmd);
  restrict_cmd->add_option("--tower", o.tower, "tower spec (tower mode)");
  restrict_cmd->add_option("--word", o.word, "word of simple roots (Bott-Samelson mode)");
  restrict_cmd->add_option("--e1", o.e1, "the basis class")->required();
  restrict_cmd->add_option("--at", o.at, "a single fixed point");
  add_common(restrict_cmd);

  auto* psitable = app.add_subcommand("psitable", "psi^u(v) for u, v below w");
  add_cartan(psitable);
  psitable->add_option("--w", o.w, "top element")->required();
  psitable->add_option("--cap", o.cap, "maximum interval size");
  add_common(psitable);

  auto* verify = app.add_subcommand("verify", "run self-check suites");
  verify->add_option("--suite", o.suite, "a2-full, b2, g2, towers, theoP or all")
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--seed", o.seed, "seed for randomized checks");
  add_common(verify);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    if (*qconst) return cmd_qconst(o, out);
    if (*qtable) return cmd_qtable(o, out);
    if (*tconst) return cmd_tconst(o, out);
    if (*rconst) return cmd_rconst(o, out, err);
    if (*bsconst) return cmd_bsconst(o, out);
    if (*restrict_cmd) {
      if (o.tower.empty() && o.word.empty()) throw InvalidInput("restrict needs --tower or --word");
      return cmd_restrict(o, out);
    }
    if (*psitable) return cmd_psitable(o, out);
    if (*verify) return cmd_verify(o, out);
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const Error& e) {
    err << "consistency failure: " << e.what() << "\n";
    return kInconsistent;
  } catch (const std::exception& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace eqkt
