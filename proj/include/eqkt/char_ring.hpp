#pragma once

// Exact Laurent polynomials over a character lattice: the representation
// rings R[T] (root lattice) and R[D] (tower lattice) with integer
// coefficients of arbitrary size.

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

namespace eqkt {

using Integer = mpz_class;

/// Exponent vector of a character e^{k_1 b_1 + ... + k_d b_d}.
using Exponent = std::vector<int>;

/// Named basis of a character lattice, e.g. a1,a2 (simple roots) or l1..lN.
class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(std::vector<std::string> labels);

  static Lattice roots(int rank);  // a1..ar
  static Lattice tower(int n);     // l1..ln
  static Lattice trivial();        // rank 0: R = Z

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  bool operator==(const Lattice&) const = default;

 private:
  std::vector<std::string> labels_;
};

/// Sparse Laurent polynomial sum c_k e^{k}. No zero coefficient is ever stored,
/// so structural equality is ring equality.
class CharPoly {
 public:
  using TermMap = std::map<Exponent, Integer>;

  explicit CharPoly(std::size_t dim = 0) : dim_(dim) {}

  static CharPoly constant(std::size_t dim, const Integer& c);
  static CharPoly monomial(Exponent e, const Integer& c = 1);
  /// 1 - e^{e}
  static CharPoly one_minus(const Exponent& e);

  std::size_t dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coefficient(const Exponent& e) const;

  /// Adds c e^{e}, dropping the term if it cancels.
  void add_term(const Exponent& e, const Integer& c);
  /// Adds c e^{shift} * g.
  void add_scaled_shifted(const CharPoly& g, const Integer& c, const Exponent& shift);

  CharPoly& operator+=(const CharPoly& g);
  CharPoly& operator-=(const CharPoly& g);
  CharPoly& operator*=(const CharPoly& g);
  CharPoly& operator*=(const Integer& c);

  friend CharPoly operator+(CharPoly f, const CharPoly& g) { return f += g; }
  friend CharPoly operator-(CharPoly f, const CharPoly& g) { return f -= g; }
  friend CharPoly operator*(const CharPoly& f, const CharPoly& g);
  friend CharPoly operator*(CharPoly f, const Integer& c) { return f *= c; }
  friend CharPoly operator-(CharPoly f) { return f *= Integer(-1); }
  friend bool operator==(const CharPoly&, const CharPoly&) = default;

  /// Multiplication by the unit e^{by}.
  CharPoly shifted(const Exponent& by) const;
  /// e^{k} -> e^{-k}
  CharPoly star() const;
  /// Evaluation of every character at 1.
  Integer augment() const;

 private:
  void check_dim(const CharPoly& g) const;

  std::size_t dim_ = 0;
  TermMap terms_;
};

inline CharPoly star(const CharPoly& f) { return f.star(); }
inline Integer augment(const CharPoly& f) { return f.augment(); }

/// h with f = g*h. Throws InexactDivision when no such Laurent polynomial exists,
/// InvalidInput when g = 0.
CharPoly exact_div(const CharPoly& f, const CharPoly& g);

/// Canonical text form: terms by total degree then exponent, both descending,
/// rendered as `C*e^{k1*a1+k2*a2}`; the zero polynomial is "0".
std::string canonical_string(const CharPoly& f, const Lattice& lattice);

/// [[coefficient, [exponents]], ...] in canonical order. Coefficients that do not
/// fit in 64 bits are written as decimal strings.
nlohmann::json to_json(const CharPoly& f);
CharPoly char_poly_from_json(const nlohmann::json& j, std::size_t dim);

/// Parses either the canonical text form or the JSON form.
CharPoly parse_char_poly(std::string_view text, const Lattice& lattice);

/// Exponent arithmetic helpers.
Exponent operator+(const Exponent& a, const Exponent& b);
Exponent operator-(const Exponent& a, const Exponent& b);
Exponent operator-(const Exponent& a);
Exponent scaled(const Exponent& a, int k);

}  // namespace eqkt
