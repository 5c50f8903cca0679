#include "eqkt/char_ring.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "eqkt/error.hpp"

namespace eqkt {

// ---- lattice ----

Lattice::Lattice(std::vector<std::string> labels) : labels_(std::move(labels)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw InvalidInput("empty lattice label");
    for (std::size_t j = 0; j < i; ++j)
      if (labels_[i] == labels_[j]) throw InvalidInput("duplicate lattice label " + labels_[i]);
  }
}

static Lattice numbered(const char* prefix, int n) {
  std::vector<std::string> l;
  for (int i = 1; i <= n; ++i) l.push_back(prefix + std::to_string(i));
  return Lattice(std::move(l));
}

Lattice Lattice::roots(int rank) { return numbered("a", rank); }
Lattice Lattice::tower(int n) { return numbered("l", n); }
Lattice Lattice::trivial() { return Lattice(); }

// ---- exponents ----

Exponent operator+(const Exponent& a, const Exponent& b) {
  Exponent r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Exponent operator-(const Exponent& a, const Exponent& b) {
  Exponent r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Exponent operator-(const Exponent& a) {
  Exponent r(a);
  for (auto& x : r) x = -x;
  return r;
}

Exponent scaled(const Exponent& a, int k) {
  Exponent r(a);
  for (auto& x : r) x *= k;
  return r;
}

// ---- CharPoly ----

CharPoly CharPoly::constant(std::size_t dim, const Integer& c) {
  CharPoly f(dim);
  f.add_term(Exponent(dim, 0), c);
  return f;
}

CharPoly CharPoly::monomial(Exponent e, const Integer& c) {
  CharPoly f(e.size());
  f.add_term(e, c);
  return f;
}

CharPoly CharPoly::one_minus(const Exponent& e) {
  CharPoly f = constant(e.size(), 1);
  f.add_term(e, -1);
  return f;
}

Integer CharPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

void CharPoly::add_term(const Exponent& e, const Integer& c) {
  if (e.size() != dim_) throw InvalidInput("exponent length does not match lattice");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void CharPoly::add_scaled_shifted(const CharPoly& g, const Integer& c, const Exponent& shift) {
  check_dim(g);
  if (c == 0) return;
  for (const auto& [e, k] : g.terms_) add_term(e + shift, k * c);
}

void CharPoly::check_dim(const CharPoly& g) const {
  if (g.dim_ != dim_) throw InvalidInput("lattice mismatch in character arithmetic");
}

CharPoly& CharPoly::operator+=(const CharPoly& g) {
  check_dim(g);
  for (const auto& [e, c] : g.terms_) add_term(e, c);
  return *this;
}

CharPoly& CharPoly::operator-=(const CharPoly& g) {
  check_dim(g);
  for (const auto& [e, c] : g.terms_) add_term(e, -c);
  return *this;
}

CharPoly operator*(const CharPoly& f, const CharPoly& g) {
  f.check_dim(g);
  CharPoly r(f.dim_);
  for (const auto& [e, c] : f.terms_) r.add_scaled_shifted(g, c, e);
  return r;
}

CharPoly& CharPoly::operator*=(const CharPoly& g) { return *this = *this * g; }

CharPoly& CharPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= c;
  return *this;
}

CharPoly CharPoly::shifted(const Exponent& by) const {
  CharPoly r(dim_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + by, c);
  return r;
}

CharPoly CharPoly::star() const {
  CharPoly r(dim_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

Integer CharPoly::augment() const {
  Integer s = 0;
  for (const auto& kv : terms_) s += kv.second;
  return s;
}

// ---- division ----

namespace {

struct Box {
  Exponent lo, hi;
};

Box newton_box(const CharPoly& f) {
  Box b{f.terms().begin()->first, f.terms().begin()->first};
  for (const auto& kv : f.terms())
    for (std::size_t i = 0; i < b.lo.size(); ++i) {
      b.lo[i] = std::min(b.lo[i], kv.first[i]);
      b.hi[i] = std::max(b.hi[i], kv.first[i]);
    }
  return b;
}

}  // namespace

CharPoly exact_div(const CharPoly& f, const CharPoly& g) {
  if (g.is_zero()) throw InvalidInput("division by zero character");
  if (f.dim() != g.dim()) throw InvalidInput("lattice mismatch in character division");
  CharPoly q(f.dim());
  if (f.is_zero()) return q;
  if (g.size() == 1) {
    const auto& [ge, gc] = *g.terms().begin();
    for (const auto& [e, c] : f.terms()) {
      if (!mpz_divisible_p(c.get_mpz_t(), gc.get_mpz_t())) throw InexactDivision("inexact division");
      q.add_term(e - ge, Integer(c / gc));
    }
    return q;
  }
  // quotient exponents are confined to the box [lo f - lo g, hi f - hi g]
  Box bf = newton_box(f), bg = newton_box(g);
  Exponent lo = bf.lo - bg.lo, hi = bf.hi - bg.hi;
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (lo[i] > hi[i]) throw InexactDivision("inexact division");

  const auto& [glead_e, glead_c] = *g.terms().rbegin();
  CharPoly r = f;
  while (!r.is_zero()) {
    const auto& [re, rc] = *r.terms().rbegin();
    if (!mpz_divisible_p(rc.get_mpz_t(), glead_c.get_mpz_t())) throw InexactDivision("inexact division");
    Exponent qe = re - glead_e;
    for (std::size_t i = 0; i < qe.size(); ++i)
      if (qe[i] < lo[i] || qe[i] > hi[i]) throw InexactDivision("inexact division");
    Integer qc = rc / glead_c;
    q.add_term(qe, qc);
    r.add_scaled_shifted(g, -qc, qe);
  }
  return q;
}

// ---- serialization ----

namespace {

long total_degree(const Exponent& e) {
  long s = 0;
  for (int x : e) s += x;
  return s;
}

std::vector<std::pair<Exponent, Integer>> canonical_terms(const CharPoly& f) {
  std::vector<std::pair<Exponent, Integer>> v(f.terms().begin(), f.terms().end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    long da = total_degree(a.first), db = total_degree(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  return v;
}

std::string render_exponent(const Exponent& e, const Lattice& lat) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    int k = e[i];
    if (k == 0) continue;
    if (k < 0)
      s += '-';
    else if (!s.empty())
      s += '+';
    if (std::abs(k) != 1) s += std::to_string(std::abs(k)) + "*";
    s += lat.labels()[i];
  }
  return s;
}

}  // namespace

std::string canonical_string(const CharPoly& f, const Lattice& lattice) {
  if (lattice.dim() != f.dim()) throw InvalidInput("lattice mismatch in canonical_string");
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : canonical_terms(f)) {
    Integer a = abs(c);
    if (c < 0)
      out += '-';
    else if (!first)
      out += '+';
    first = false;
    std::string ex = render_exponent(e, lattice);
    if (ex.empty()) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += "e^{" + ex + "}";
    }
  }
  return out;
}

nlohmann::json to_json(const CharPoly& f) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [e, c] : canonical_terms(f)) {
    nlohmann::json coef;
    if (c.fits_slong_p())
      coef = static_cast<long long>(c.get_si());
    else
      coef = c.get_str();
    arr.push_back(nlohmann::json::array({coef, e}));
  }
  return arr;
}

CharPoly char_poly_from_json(const nlohmann::json& j, std::size_t dim) {
  if (!j.is_array()) throw InvalidInput("character JSON must be an array");
  CharPoly f(dim);
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[1].is_array()) throw InvalidInput("bad character term");
    Integer c;
    if (t[0].is_number_integer())
      c = Integer(std::to_string(t[0].get<long long>()));
    else if (t[0].is_string()) {
      if (c.set_str(t[0].get<std::string>(), 10) != 0) throw InvalidInput("bad coefficient");
    } else
      throw InvalidInput("bad coefficient");
    Exponent e;
    for (const auto& x : t[1]) {
      if (!x.is_number_integer()) throw InvalidInput("bad exponent");
      e.push_back(x.get<int>());
    }
    if (e.size() != dim) throw InvalidInput("exponent length does not match lattice");
    f.add_term(e, c);
  }
  return f;
}

namespace {

class TextParser {
 public:
  TextParser(std::string_view s, const Lattice& lat) : lat_(lat) {
    for (char ch : s)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
  }

  CharPoly parse() {
    CharPoly f(lat_.dim());
    if (s_.empty()) fail();
    if (s_ == "0") return f;
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
      } else if (!first) {
        fail();
      }
      first = false;
      Integer c = 1;
      bool have_coef = false;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        c = number();
        have_coef = true;
        if (peek() == '*') get();
        else if (peek() == 'e') fail();
      }
      Exponent e(lat_.dim(), 0);
      if (peek() == 'e') {
        get();
        expect('^');
        expect('{');
        e = exponent();
        expect('}');
      } else if (!have_coef) {
        fail();
      }
      f.add_term(e, sign * c);
    }
    return f;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
  void expect(char c) {
    if (get() != c) fail();
  }
  [[noreturn]] void fail() const { throw InvalidInput("cannot parse character: " + s_); }

  Integer number() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) d += get();
    if (d.empty()) fail();
    return Integer(d);
  }

  Exponent exponent() {
    Exponent e(lat_.dim(), 0);
    bool first = true;
    while (peek() != '}') {
      int sign = 1;
      if (peek() == '+' || peek() == '-')
        sign = get() == '-' ? -1 : 1;
      else if (!first)
        fail();
      first = false;
      long k = 1;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        k = number().get_si();
        expect('*');
      }
      std::string label;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') label += get();
      auto it = std::find(lat_.labels().begin(), lat_.labels().end(), label);
      if (it == lat_.labels().end()) fail();
      e[it - lat_.labels().begin()] += static_cast<int>(sign * k);
    }
    return e;
  }

  const Lattice& lat_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

CharPoly parse_char_poly(std::string_view text, const Lattice& lattice) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception&) {
      throw InvalidInput("cannot parse character JSON");
    }
    return char_poly_from_json(j, lattice.dim());
  }
  return TextParser(text, lattice).parse();
}

}  // namespace eqkt
