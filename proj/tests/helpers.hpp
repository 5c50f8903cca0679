#pragma once

#include <string>

#include "eqkt/char_ring.hpp"
#include "eqkt/root_weyl.hpp"

namespace testing {

// character over a1..ar written in the text form, e.g. "1-e^{a1}"
inline eqkt::CharPoly R(const std::string& s, int rank = 2) {
  return eqkt::parse_char_poly(s, eqkt::Lattice::roots(rank));
}

// character over l1..ln
inline eqkt::CharPoly D(const std::string& s, int n) { return eqkt::parse_char_poly(s, eqkt::Lattice::tower(n)); }

// 1-based word literal
inline eqkt::Word W(std::initializer_list<int> w) {
  eqkt::Word o;
  for (int k : w) o.push_back(k - 1);
  return o;
}

inline std::string str(const eqkt::CharPoly& f) {
  return eqkt::canonical_string(f, f.dim() == 0 ? eqkt::Lattice::trivial() : eqkt::Lattice::roots(f.dim()));
}

}  // namespace testing
