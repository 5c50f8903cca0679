#include "eqkt/root_weyl.hpp"

#include <algorithm>
#include <map>

#include "eqkt/error.hpp"

namespace eqkt {

CartanMatrix CartanMatrix::validate(const std::vector<std::vector<int>>& m) {
  const int r = static_cast<int>(m.size());
  if (r == 0) throw InvalidInput("Cartan matrix must have positive rank");
  CartanMatrix c;
  c.rank_ = r;
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != r) throw InvalidInput("Cartan matrix must be square");
    c.a_.insert(c.a_.end(), row.begin(), row.end());
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      int a = c(i, j);
      if (i == j && a != 2) throw InvalidInput("Cartan matrix: diagonal entry is not 2");
      if (i != j && a > 0) throw InvalidInput("Cartan matrix: positive off-diagonal entry");
      if (i != j && (a == 0) != (c(j, i) == 0))
        throw InvalidInput("Cartan matrix: asymmetric zero pattern");
    }
  return c;
}

CartanMatrix CartanMatrix::preset(const std::string& name) {
  if (name == "A1") return validate({{2}});
  if (name == "A2") return validate({{2, -1}, {-1, 2}});
  if (name == "A3") return validate({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
  if (name == "B2") return validate({{2, -2}, {-1, 2}});
  if (name == "G2") return validate({{2, -1}, {-3, 2}});
  throw InvalidInput("unknown Cartan preset: " + name);
}

std::vector<std::vector<int>> CartanMatrix::rows() const {
  std::vector<std::vector<int>> out(rank_);
  for (int i = 0; i < rank_; ++i) out[i].assign(a_.begin() + i * rank_, a_.begin() + (i + 1) * rank_);
  return out;
}

bool CartanMatrix::has_infinite_pair() const {
  for (int i = 0; i < rank_; ++i)
    for (int j = i + 1; j < rank_; ++j)
      if ((*this)(i, j) * (*this)(j, i) >= 4) return true;
  return false;
}

bool length_lex_less(const WeylElt& a, const WeylElt& b) {
  if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
  return a.word < b.word;
}

// ---- WeylGroup ----

WeylGroup::WeylGroup(CartanMatrix c) : c_(std::move(c)) {
  const int r = rank();
  id_.assign(r * r, 0);
  for (int i = 0; i < r; ++i) id_[i * r + i] = 1;
}

void WeylGroup::check_index(int i) const {
  if (i < 0 || i >= rank()) throw InvalidInput("simple reflection index out of range");
}

RootVec WeylGroup::reflect(int i, const RootVec& v) const {
  check_index(i);
  if (static_cast<int>(v.size()) != rank()) throw InvalidInput("root vector has wrong length");
  long pairing = 0;
  for (int j = 0; j < rank(); ++j) pairing += static_cast<long>(c_(i, j)) * v[j];
  RootVec out = v;
  out[i] -= static_cast<int>(pairing);
  return out;
}

RootVec WeylGroup::apply(const WeylElt& w, const RootVec& v) const {
  const int r = rank();
  RootVec out(r, 0);
  for (int k = 0; k < r; ++k) {
    std::int64_t s = 0;
    for (int j = 0; j < r; ++j) s += w.action[k * r + j] * v[j];
    out[k] = static_cast<int>(s);
  }
  return out;
}

RootVec WeylGroup::image_of_simple(const WeylElt& w, int i) const {
  check_index(i);
  const int r = rank();
  RootVec out(r);
  for (int k = 0; k < r; ++k) out[k] = static_cast<int>(w.action[k * r + i]);
  return out;
}

IntMatrix WeylGroup::mul(const IntMatrix& a, const IntMatrix& b) const {
  const int r = rank();
  IntMatrix out(r * r, 0);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      std::int64_t aik = a[i * r + k];
      if (aik == 0) continue;
      for (int j = 0; j < r; ++j) out[i * r + j] += aik * b[k * r + j];
    }
  return out;
}

IntMatrix WeylGroup::times_s_right(const IntMatrix& a, int i) const {
  // column j -= a_ij * column i
  const int r = rank();
  IntMatrix out = a;
  for (int j = 0; j < r; ++j) {
    int aij = c_(i, j);
    if (aij == 0) continue;
    for (int k = 0; k < r; ++k) out[k * r + j] -= aij * a[k * r + i];
  }
  return out;
}

IntMatrix WeylGroup::times_s_left(int i, const IntMatrix& a) const {
  // row i -= sum_j a_ij * row j
  const int r = rank();
  IntMatrix out = a;
  for (int m = 0; m < r; ++m) {
    std::int64_t s = 0;
    for (int j = 0; j < r; ++j) s += c_(i, j) * a[j * r + m];
    out[i * r + m] = a[i * r + m] - s;
  }
  return out;
}

bool WeylGroup::column_negative(const IntMatrix& m, int i) const {
  const int r = rank();
  for (int k = 0; k < r; ++k) {
    std::int64_t x = m[k * r + i];
    if (x != 0) return x < 0;
  }
  return false;
}

WeylElt WeylGroup::make(IntMatrix action, IntMatrix inverse) const {
  WeylElt w;
  // strip the smallest left descent until nothing is left
  IntMatrix inv = inverse;
  while (inv != id_) {
    int i = 0;
    while (i < rank() && !column_negative(inv, i)) ++i;
    if (i == rank()) throw ConsistencyError("matrix is not a Weyl group element");
    w.word.push_back(i);
    inv = times_s_right(inv, i);
  }
  w.action = std::move(action);
  w.inverse = std::move(inverse);
  return w;
}

WeylElt WeylGroup::identity() const { return WeylElt{{}, id_, id_}; }

WeylElt WeylGroup::simple(int i) const {
  check_index(i);
  IntMatrix s = times_s_right(id_, i);
  return WeylElt{{i}, s, s};
}

WeylElt WeylGroup::from_word(const Word& w) const {
  IntMatrix a = id_, inv = id_;
  for (int i : w) {
    check_index(i);
    a = times_s_right(a, i);
    inv = times_s_left(i, inv);
  }
  return make(std::move(a), std::move(inv));
}

bool WeylGroup::is_reduced(const Word& w) const { return from_word(w).length() == w.size(); }

WeylElt WeylGroup::multiply(const WeylElt& u, const WeylElt& v) const {
  return make(mul(u.action, v.action), mul(v.inverse, u.inverse));
}

WeylElt WeylGroup::inverse(const WeylElt& w) const { return make(w.inverse, w.action); }

WeylElt WeylGroup::times_simple(const WeylElt& w, int i) const {
  check_index(i);
  return make(times_s_right(w.action, i), times_s_left(i, w.inverse));
}

bool WeylGroup::descent(const WeylElt& w, int i, Side side) const {
  check_index(i);
  return column_negative(side == Side::Right ? w.action : w.inverse, i);
}

WeylElt WeylGroup::demazure_product(const Word& w) const {
  IntMatrix a = id_, inv = id_;
  for (int i : w) {
    check_index(i);
    if (column_negative(a, i)) continue;
    a = times_s_right(a, i);
    inv = times_s_left(i, inv);
  }
  return make(std::move(a), std::move(inv));
}

bool WeylGroup::bruhat_leq(const WeylElt& u, const WeylElt& v) const {
  if (u.length() > v.length()) return false;
  // lifting: peel letters of v from the right
  IntMatrix x = u.action;
  for (auto it = v.word.rbegin(); it != v.word.rend(); ++it)
    if (column_negative(x, *it)) x = times_s_right(x, *it);
  return x == id_;
}

std::vector<RootVec> WeylGroup::inversion_set(const WeylElt& w) const {
  WeylElt winv = inverse(w);
  std::vector<RootVec> out;
  IntMatrix prefix = id_;
  const int r = rank();
  for (int i : winv.word) {
    RootVec beta(r);
    for (int k = 0; k < r; ++k) beta[k] = static_cast<int>(prefix[k * r + i]);
    out.push_back(std::move(beta));
    prefix = times_s_right(prefix, i);
  }
  return out;
}

RootVec WeylGroup::rho_minus_w_rho(const WeylElt& w) const {
  RootVec s(rank(), 0);
  for (const auto& b : inversion_set(inverse(w)))
    for (int k = 0; k < rank(); ++k) s[k] += b[k];
  return s;
}

std::vector<WeylElt> WeylGroup::enumerate_interval(const WeylElt& w, std::size_t cap) const {
  // subword products of the canonical word, one letter at a time
  std::map<IntMatrix, std::pair<IntMatrix, IntMatrix>> seen;  // action -> (action, inverse)
  seen.emplace(id_, std::make_pair(id_, id_));
  for (int i : w.word) {
    std::vector<std::pair<IntMatrix, IntMatrix>> fresh;
    for (const auto& kv : seen) {
      IntMatrix a = times_s_right(kv.second.first, i);
      if (!seen.count(a)) fresh.emplace_back(a, times_s_left(i, kv.second.second));
    }
    for (auto& p : fresh) {
      IntMatrix key = p.first;
      seen.emplace(std::move(key), std::move(p));
      if (seen.size() > cap) throw CapExceeded("Bruhat interval exceeds cap of " + std::to_string(cap));
    }
  }
  std::vector<WeylElt> out;
  out.reserve(seen.size());
  for (auto& kv : seen) out.push_back(make(kv.second.first, kv.second.second));
  std::sort(out.begin(), out.end(), length_lex_less);
  return out;
}

std::vector<WeylElt> WeylGroup::enumerate_group(std::size_t cap, int max_length) const {
  std::vector<WeylElt> out{identity()};
  std::map<IntMatrix, bool> seen{{id_, true}};
  std::vector<WeylElt> layer{identity()};
  for (int len = 1; !layer.empty() && (max_length < 0 || len <= max_length); ++len) {
    std::vector<WeylElt> next;
    for (const auto& x : layer)
      for (int i = 0; i < rank(); ++i) {
        if (column_negative(x.action, i)) continue;
        IntMatrix a = times_s_right(x.action, i);
        if (seen.count(a)) continue;
        seen.emplace(a, true);
        next.push_back(make(std::move(a), times_s_left(i, x.inverse)));
        if (seen.size() > cap) throw CapExceeded("Weyl group enumeration exceeds cap of " + std::to_string(cap));
      }
    std::sort(next.begin(), next.end(), length_lex_less);
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace eqkt
