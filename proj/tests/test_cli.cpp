#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "eqkt/cli.hpp"
#include "helpers.hpp"

using namespace eqkt;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("qconst") {
  auto r = run({"qconst", "--cartan", "A2", "--u", "", "--v", "", "--w", "1 2 1"});
  CHECK(r.code == kOk);
  CHECK(r.out == "-e^{2*a1+2*a2}\n");
  CHECK(run({"qconst", "--cartan", "A2", "--u", "1", "--v", "", "--w", "1 2 1"}).out == "e^{2*a1+2*a2}\n");
  CHECK(run({"qconst", "--u", "1", "--v", "2", "--w", "1,2"}).out == "e^{2*a1+a2}\n");
  auto at = run({"qconst", "--u", "", "--v", "", "--w", "1 2 1", "--e3", "100"});
  CHECK(at.out == "[1] -e^{a1}\n");
  CHECK(run({"qconst", "--cartan", "G2", "--u", "2", "--v", "2 1", "--w", "1 2 1 2"}).out ==
        "-e^{5*a1+6*a2}-e^{4*a1+6*a2}-e^{3*a1+6*a2}\n");
}

TEST_CASE("tconst") {
  auto r = run({"tconst", "--cartan", "G2", "--u", "", "--v", "", "--w", "2 1 2 1 2"});
  CHECK(r.code == kOk);
  CHECK(r.out == "-13\n");
  auto j = nlohmann::json::parse(run({"tconst", "--cartan", "G2", "--u", "", "--v", "", "--w", "2 1 2 1 2", "--json"}).out);
  CHECK(j["value"] == -13);
}

TEST_CASE("rconst and bsconst") {
  auto r = run({"rconst", "--tower", R"({"n":2,"c":{"1,2":-1}})", "--e1", "10", "--e2", "10", "--e3", "11", "--check"});
  CHECK(r.code == kOk);
  CHECK_FALSE(r.out.empty());
  auto b = run({"bsconst", "--cartan", "A2", "--word", "1 2 1", "--e1", "100", "--e2", "001", "--e3", "111"});
  CHECK(b.code == kOk);
  CHECK(b.out == "-e^{-a1-a2}-e^{-2*a1-2*a2}\n");
  auto t = run({"rconst", "--tower", R"({"n":3,"c":{"1,2":-1,"1,3":2,"2,3":-1}})", "--e1", "100", "--e2", "001",
                "--e3", "111", "--check"});
  CHECK(t.code == kOk);
  CHECK(t.out == "-e^{-l2-l3}-e^{-l1-2*l2-l3}\n");
}

TEST_CASE("qtable, restrict, psitable") {
  auto q = run({"qtable", "--u", "1", "--v", "2"});
  CHECK(q.out == "[1 2] e^{2*a1+a2}\n[2 1] e^{a1+2*a2}\n[1 2 1] -e^{2*a1+2*a2}\n");
  auto aff = run({"qtable", "--cartan", R"({"rank":2,"matrix":[[2,-2],[-2,2]]})", "--u", "", "--v", "", "--max-length", "1"});
  CHECK(aff.code == kOk);
  CHECK(aff.out.rfind("# l(w) <= 1\n", 0) == 0);
  auto rs = run({"restrict", "--word", "1", "--cartan", "A1", "--e1", "0", "--at", "1"});
  CHECK(rs.code == kOk);
  CHECK(rs.out.find("e^{-a1}") != std::string::npos);
  auto ps = run({"psitable", "--w", "1 2 1"});
  CHECK(ps.code == kOk);
  CHECK_FALSE(ps.out.empty());
}

TEST_CASE("text and JSON agree") {
  const std::vector<std::string> base = {"qtable", "--cartan", "B2", "--u", "1", "--v", "1 2"};
  auto text = run(base);
  auto args = base;
  args.push_back("--json");
  auto j = nlohmann::json::parse(run(args).out);
  std::istringstream lines(text.out);
  std::string line;
  std::size_t k = 0;
  const Lattice lat = Lattice::roots(2);
  while (std::getline(lines, line)) {
    REQUIRE(k < j["terms"].size());
    const auto& t = j["terms"][k++];
    const std::string value = line.substr(line.find("] ") + 2);
    CHECK(value == t["value"]["text"].get<std::string>());
    CHECK(parse_char_poly(value, lat) == char_poly_from_json(t["value"]["terms"], 2));
  }
  CHECK(k == j["terms"].size());
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args = {"qtable", "--cartan", "G2", "--u", "1", "--v", "2", "--threads", "4", "--json"};
  auto a = run(args), b = run(args);
  CHECK(a.out == b.out);
  auto c = args;
  c[c.size() - 2] = "1";
  CHECK(run(c).out == a.out);
}

TEST_CASE("exit codes") {
  CHECK(run({"qconst", "--cartan", R"({"rank":2,"matrix":[[2,1],[1,2]]})", "--u", "", "--v", "", "--w", "1"}).code ==
        kInvalidInput);
  CHECK(run({"qconst", "--cartan", "{oops", "--u", "", "--v", "", "--w", "1"}).code == kInvalidInput);
  CHECK(run({"qconst", "--u", "", "--v", "", "--w", "1 1"}).code == kInvalidInput);
  CHECK(run({"qconst", "--u", "", "--v", "", "--w", "1 3"}).code == kInvalidInput);
  CHECK(run({"qconst", "--u", "", "--v", "", "--w", "1 2", "--e3", "1x"}).code == kInvalidInput);
  CHECK(run({"qconst", "--u", "", "--v", "", "--w", "1 2", "--e3", "101"}).code == kInvalidInput);
  CHECK(run({"rconst", "--tower", R"({"n":2})", "--e1", "1", "--e2", "10", "--e3", "11"}).code == kInvalidInput);
  CHECK(run({"nosuch"}).code == kInvalidInput);
  CHECK(run({"qconst"}).code == kInvalidInput);
  auto cap = run({"qtable", "--cartan", R"({"rank":2,"matrix":[[2,-2],[-2,2]]})", "--u", "", "--v", ""});
  CHECK(cap.code == kCapExceeded);
  CHECK_FALSE(cap.err.empty());
  CHECK(run({"qtable", "--cartan", "A3", "--u", "", "--v", "", "--cap", "10"}).code == kCapExceeded);
}

TEST_CASE("Cartan matrix from a file") {
  const std::string path = "eqkt_test_cartan.json";
  {
    std::ofstream f(path);
    f << R"({"rank": 2, "matrix": [[2,-1],[-1,2]]})";
  }
  CHECK(run({"qconst", "--cartan", "@" + path, "--u", "", "--v", "", "--w", "1 2 1"}).out == "-e^{2*a1+2*a2}\n");
  std::remove(path.c_str());
  CHECK(run({"qconst", "--cartan", "@" + path, "--u", "", "--v", "", "--w", "1"}).code == kInvalidInput);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--suite", "a2-full"});
  CHECK(r.code == kOk);
  CHECK(r.out.find("FAIL") == std::string::npos);
  auto j = nlohmann::json::parse(run({"verify", "--suite", "towers", "--json"}).out);
  CHECK(j["passed"] == true);
}
