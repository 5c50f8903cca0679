#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eqkt/bott_tower.hpp"
#include "eqkt/cli.hpp"
#include "eqkt/error.hpp"
#include "eqkt/flag_kt.hpp"
#include "eqkt/io.hpp"
#include "eqkt/verify.hpp"

namespace py = pybind11;
using namespace eqkt;

namespace {

// Words are 1-based strings, "" is the identity.
struct Ctx {
  CartanMatrix c;
  WeylGroup g;
  explicit Ctx(const std::string& cartan) : c(parse_cartan(cartan)), g(c) {}
  WeylElt elt(const std::string& w) const { return g.from_word(parse_word(w, c.rank())); }
  Word word(const std::string& w) const { return parse_word(w, c.rank()); }
  std::string str(const CharPoly& f) const { return canonical_string(f, Lattice::roots(c.rank())); }
};

py::int_ to_py(const Integer& n) { return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(n.get_str().c_str(), nullptr, 10))); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Structure constants of equivariant K-theory of flag varieties and Bott towers";

  // translators run newest first, so the base class goes first
  auto& base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());
  py::register_exception<InexactDivision>(m, "InexactDivision", base.ptr());
  py::register_exception<ConsistencyError>(m, "ConsistencyError", base.ptr());

  m.def(
      "q_const",
      [](const std::string& u, const std::string& v, const std::string& w, const std::string& cartan) {
        Ctx x(cartan);
        return x.str(q_const(x.c, x.elt(u), x.elt(v), x.word(w)));
      },
      py::arg("u"), py::arg("v"), py::arg("w"), py::arg("cartan") = "A2");

  m.def(
      "q_table",
      [](const std::string& u, const std::string& v, const std::string& cartan, std::optional<int> max_length,
         std::size_t cap_, unsigned threads) {
        Ctx x(cartan);
        QTableOptions opt;
        opt.cap = cap_;
        opt.max_length = max_length;
        opt.threads = threads;
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& [w, q] : q_table(x.c, x.elt(u), x.elt(v), opt)) out.emplace_back(format_word(w.word), x.str(q));
        return out;
      },
      py::arg("u"), py::arg("v"), py::arg("cartan") = "A2", py::arg("max_length") = py::none(),
      py::arg("cap") = 10000, py::arg("threads") = 1);

  m.def(
      "t_const",
      [](const std::string& u, const std::string& v, const std::string& w, const std::string& cartan) {
        Ctx x(cartan);
        return to_py(t_const(x.c, x.elt(u), x.elt(v), x.word(w)));
      },
      py::arg("u"), py::arg("v"), py::arg("w"), py::arg("cartan") = "A2");

  m.def(
      "psi_restrict",
      [](const std::string& u, const std::string& w, const std::string& cartan) {
        Ctx x(cartan);
        return x.str(psi_restrict(x.c, x.elt(u), x.word(w)));
      },
      py::arg("u"), py::arg("w"), py::arg("cartan") = "A2");

  m.def(
      "bs_structure_const",
      [](const std::string& word, const std::string& e1, const std::string& e2, const std::string& e3,
         const std::string& cartan) {
        Ctx x(cartan);
        WordSpec ws(x.c, x.word(word));
        return x.str(bs_structure_const(ws, parse_bitword(e1, ws.n()), parse_bitword(e2, ws.n()),
                                        parse_bitword(e3, ws.n())));
      },
      py::arg("word"), py::arg("e1"), py::arg("e2"), py::arg("e3"), py::arg("cartan") = "A2");

  m.def(
      "tower_structure_const",
      [](const std::string& tower, const std::string& e1, const std::string& e2, const std::string& e3) {
        TowerSpec t = parse_tower(tower);
        return canonical_string(
            tower_structure_const(t, parse_bitword(e1, t.n()), parse_bitword(e2, t.n()), parse_bitword(e3, t.n())),
            t.lattice());
      },
      py::arg("tower"), py::arg("e1"), py::arg("e2"), py::arg("e3"));

  m.def(
      "chi_basis_product",
      [](const std::string& tower, const std::string& e1, const std::string& e2, const std::string& e3) {
        TowerSpec t = parse_tower(tower);
        auto cls = pointwise_product(restrict_basis_class(t, parse_bitword(e1, t.n())),
                                     restrict_basis_class(t, parse_bitword(e2, t.n())));
        return canonical_string(chi_localized(t, parse_bitword(e3, t.n()), cls), t.lattice());
      },
      py::arg("tower"), py::arg("e1"), py::arg("e2"), py::arg("e3"),
      "chi(Y_e3, mu_e1 mu_e2) by localization");

  m.def(
      "verify",
      [](const std::string& suite, std::uint64_t seed) { return run_suite(suite, seed).to_json().dump(); },
      py::arg("suite") = "all", py::arg("seed") = 20240601);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
