#pragma once

// Generalized Cartan matrices, the root lattice, Weyl group elements,
// Bruhat order and the 0-Hecke monoid. Indices are 0-based in this API.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace eqkt {

using RootVec = std::vector<int>;
/// A word in the simple reflections, 0-based letters.
using Word = std::vector<int>;

class CartanMatrix {
 public:
  /// Validates a_ii = 2, a_ij <= 0 off the diagonal and a_ij = 0 iff a_ji = 0.
  static CartanMatrix validate(const std::vector<std::vector<int>>& m);
  /// "A1", "A2", "A3", "B2" or "G2".
  static CartanMatrix preset(const std::string& name);

  int rank() const { return rank_; }
  int operator()(int i, int j) const { return a_[i * rank_ + j]; }
  std::vector<std::vector<int>> rows() const;
  /// True when some pair has a_ij a_ji >= 4 (the rank-2 subgroup is infinite).
  bool has_infinite_pair() const;

  bool operator==(const CartanMatrix&) const = default;

 private:
  int rank_ = 0;
  std::vector<int> a_;
};

/// Square integer matrix, row major.
using IntMatrix = std::vector<std::int64_t>;

/// Weyl group element. `action` is the matrix of w on the root lattice in the
/// basis of simple roots (column j = w(alpha_j)); `inverse` is that of w^-1.
/// `word` is the lexicographically smallest reduced word.
struct WeylElt {
  Word word;
  IntMatrix action;
  IntMatrix inverse;

  std::size_t length() const { return word.size(); }
  bool operator==(const WeylElt& o) const { return action == o.action; }
  bool operator<(const WeylElt& o) const { return action < o.action; }
};

enum class Side { Left, Right };

class WeylGroup {
 public:
  explicit WeylGroup(CartanMatrix c);

  const CartanMatrix& cartan() const { return c_; }
  int rank() const { return c_.rank(); }

  /// s_i(v) = v - <v, alpha_i^vee> alpha_i
  RootVec reflect(int i, const RootVec& v) const;
  /// w(v)
  RootVec apply(const WeylElt& w, const RootVec& v) const;
  /// w(alpha_i)
  RootVec image_of_simple(const WeylElt& w, int i) const;

  WeylElt identity() const;
  WeylElt simple(int i) const;
  /// Group product of an arbitrary word (not necessarily reduced).
  WeylElt from_word(const Word& w) const;
  bool is_reduced(const Word& w) const;

  WeylElt multiply(const WeylElt& u, const WeylElt& v) const;
  WeylElt inverse(const WeylElt& w) const;
  WeylElt times_simple(const WeylElt& w, int i) const;  // w s_i

  bool descent(const WeylElt& w, int i, Side side) const;
  /// 0-Hecke product of a word.
  WeylElt demazure_product(const Word& w) const;
  bool bruhat_leq(const WeylElt& u, const WeylElt& v) const;

  /// Delta(w): positive roots made negative by w, in the order given by the
  /// canonical word of w^-1.
  std::vector<RootVec> inversion_set(const WeylElt& w) const;
  /// rho - w rho, as the sum of Delta(w^-1).
  RootVec rho_minus_w_rho(const WeylElt& w) const;

  /// All u <= w, sorted by length then canonical word.
  std::vector<WeylElt> enumerate_interval(const WeylElt& w, std::size_t cap = 10000) const;
  /// Elements of W of length <= max_length (all of W when negative), same order.
  std::vector<WeylElt> enumerate_group(std::size_t cap = 10000, int max_length = -1) const;

 private:
  IntMatrix mul(const IntMatrix& a, const IntMatrix& b) const;
  IntMatrix times_s_right(const IntMatrix& a, int i) const;  // a S_i
  IntMatrix times_s_left(int i, const IntMatrix& a) const;   // S_i a
  bool column_negative(const IntMatrix& m, int i) const;
  WeylElt make(IntMatrix action, IntMatrix inverse) const;
  void check_index(int i) const;

  CartanMatrix c_;
  IntMatrix id_;
};

/// Orders elements by length, then canonical word.
bool length_lex_less(const WeylElt& a, const WeylElt& b);

}  // namespace eqkt
