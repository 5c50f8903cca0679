#include "eqkt/io.hpp"

#include <fstream>
#include <sstream>

#include "eqkt/error.hpp"

namespace eqkt {

namespace {

nlohmann::json load_json(const std::string& text) {
  std::string body = text;
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw InvalidInput("cannot open " + text.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  try {
    return nlohmann::json::parse(body);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

CartanMatrix parse_cartan(const std::string& text) {
  if (text.empty()) throw InvalidInput("missing Cartan matrix");
  if (text[0] != '@' && text[0] != '{' && text[0] != '[') return CartanMatrix::preset(text);
  nlohmann::json j = load_json(text);
  if (j.is_string()) return CartanMatrix::preset(j.get<std::string>());
  nlohmann::json m = j.is_object() ? j.value("matrix", nlohmann::json()) : j;
  std::vector<std::vector<int>> rows;
  try {
    rows = m.get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception&) {
    throw InvalidInput("Cartan matrix must be a list of integer rows");
  }
  if (j.is_object() && j.contains("rank")) {
    if (!j["rank"].is_number_integer() || j["rank"].get<int>() != static_cast<int>(rows.size()))
      throw InvalidInput("Cartan rank does not match the matrix");
  }
  return CartanMatrix::validate(rows);
}

nlohmann::json cartan_to_json(const CartanMatrix& c) { return {{"rank", c.rank()}, {"matrix", c.rows()}}; }

Word parse_word(const std::string& text, int rank) {
  std::string s = text;
  for (char& ch : s)
    if (ch == ',') ch = ' ';
  std::istringstream in(s);
  Word w;
  std::string tok;
  while (in >> tok) {
    int k;
    std::size_t used = 0;
    try {
      k = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw InvalidInput("malformed word: " + text);
    }
    if (used != tok.size()) throw InvalidInput("malformed word: " + text);
    if (k < 1 || k > rank) throw InvalidInput("word letter out of range: " + tok);
    w.push_back(k - 1);
  }
  return w;
}

std::string format_word(const Word& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(w[k] + 1);
  }
  return s;
}

nlohmann::json word_to_json(const Word& w) {
  nlohmann::json j = nlohmann::json::array();
  for (int i : w) j.push_back(i + 1);
  return j;
}

BitWord parse_bitword(const std::string& text, int expected_length) {
  BitWord b = BitWord::parse(text);
  if (expected_length >= 0 && b.n != expected_length)
    throw InvalidInput("bit word " + text + " should have length " + std::to_string(expected_length));
  return b;
}

TowerSpec parse_tower(const std::string& text) {
  if (text.empty()) throw InvalidInput("missing tower spec");
  return TowerSpec::from_json(load_json(text));
}

}  // namespace eqkt
