#pragma once

// Bott towers Y_C: the integers c_{k,l}(eps), the weights lambda_i(eps),
// fixed point restrictions of E_i, F_i, L_i and of the basis classes, and the
// localization Euler characteristic.

#include <vector>

#include <nlohmann/json.hpp>

#include "eqkt/bitword.hpp"
#include "eqkt/char_ring.hpp"

namespace eqkt {

class TowerSpec {
 public:
  TowerSpec() = default;
  /// c is N x N; only entries with i < j are read.
  TowerSpec(int n, std::vector<std::vector<int>> c);

  /// {"n": 2, "c": {"1,2": -1}} (1-based keys, missing entries are 0)
  static TowerSpec from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  int n() const { return n_; }
  /// c_{i,j}, 0-based, i < j
  int c(int i, int j) const { return c_[i][j]; }
  Lattice lattice() const { return Lattice::tower(n_); }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> c_;
};

/// Function from {0,1}^N to R[D], indexed by mask.
struct FixedPointClass {
  int n = 0;
  std::vector<CharPoly> values;

  const CharPoly& at(const BitWord& e) const { return values.at(e.mask); }
  CharPoly& at(const BitWord& e) { return values.at(e.mask); }
  bool operator==(const FixedPointClass&) const = default;
};

FixedPointClass pointwise_product(const FixedPointClass& a, const FixedPointClass& b);

/// c_{k,l}(eps), 0-based k < l.
int c_eps(const TowerSpec& spec, const BitWord& eps, int k, int l);
/// All c_{k,l}(eps) at once; entries with k >= l are 0.
std::vector<std::vector<int>> c_eps_table(const TowerSpec& spec, const BitWord& eps);

/// lambda_i(eps) as an exponent vector over l1..lN.
Exponent lambda_eps(const TowerSpec& spec, const BitWord& eps, int i);

enum class Generator { E, F, L };

FixedPointClass restrict_generator(const TowerSpec& spec, Generator which, int i);
/// The basis class mu_eps at every fixed point.
FixedPointClass restrict_basis_class(const TowerSpec& spec, const BitWord& eps);

/// chi(Y_eps, cls) through the fixed points eps' <= eps.
CharPoly chi_localized(const TowerSpec& spec, const BitWord& eps, const FixedPointClass& cls);

/// r_{e1,e2}^{e3}
CharPoly tower_structure_const(const TowerSpec& spec, const BitWord& e1, const BitWord& e2,
                               const BitWord& e3);

}  // namespace eqkt
