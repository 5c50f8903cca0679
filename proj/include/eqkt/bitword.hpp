#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eqkt/error.hpp"

namespace eqkt {

/// epsilon in {0,1}^N. Bit k of `mask` is epsilon_{k+1}; strings are written
/// little-index-first, so "101" has pi_+ = {1,3}.
struct BitWord {
  static constexpr int kMaxLength = 30;

  int n = 0;
  std::uint32_t mask = 0;

  BitWord() = default;
  BitWord(int n_, std::uint32_t mask_) : n(n_), mask(mask_) {
    if (n < 0 || n > kMaxLength) throw InvalidInput("bit word length out of range");
    if (n < 32 && (mask >> n) != 0) throw InvalidInput("bit word mask wider than its length");
  }

  static BitWord zeros(int n) { return BitWord(n, 0); }
  static BitWord ones(int n) { return BitWord(n, n == 0 ? 0u : (~0u >> (32 - n))); }

  static BitWord parse(const std::string& s) {
    if (static_cast<int>(s.size()) > kMaxLength) throw InvalidInput("bit word too long");
    std::uint32_t m = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k] == '1')
        m |= 1u << k;
      else if (s[k] != '0')
        throw InvalidInput("malformed bit word: " + s);
    }
    return BitWord(static_cast<int>(s.size()), m);
  }

  std::string str() const {
    std::string s;
    for (int k = 0; k < n; ++k) s += bit(k) ? '1' : '0';
    return s;
  }

  bool bit(int k) const { return (mask >> k) & 1u; }
  int count() const { return __builtin_popcount(mask); }  // l(epsilon)
  std::vector<int> plus() const {                         // pi_+, 0-based
    std::vector<int> v;
    for (int k = 0; k < n; ++k)
      if (bit(k)) v.push_back(k);
    return v;
  }

  /// epsilon <= epsilon' iff pi_+(epsilon) is contained in pi_+(epsilon')
  bool leq(const BitWord& o) const { return n == o.n && (mask & ~o.mask) == 0; }

  bool operator==(const BitWord&) const = default;
  bool operator<(const BitWord& o) const { return n != o.n ? n < o.n : mask < o.mask; }
};

/// All 2^n bit words, in mask order.
inline std::vector<BitWord> all_bitwords(int n) {
  std::vector<BitWord> v;
  for (std::uint32_t m = 0; m < (1u << n); ++m) v.emplace_back(n, m);
  return v;
}

}  // namespace eqkt
