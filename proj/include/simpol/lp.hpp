#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "simpol/rational.hpp"

namespace simpol::lp {

using VarKey = std::string;

// Equalities over named variables, with an optional nonnegativity flag per
// variable. Dense exact-rational solving; instance sizes here stay small.
class LinearSystem {
 public:
  // Returns the variable index. Re-adding an existing key must agree on the flag.
  int add_variable(const VarKey& key, bool nonneg = true);
  void add_equality(const std::map<VarKey, Rational>& coeffs, const Rational& rhs);

  int var_index(const VarKey& key) const;
  bool has_variable(const VarKey& key) const { return index_.count(key) > 0; }
  const std::vector<VarKey>& variables() const { return keys_; }
  bool is_nonneg(int idx) const { return nonneg_[idx]; }
  std::size_t equality_count() const { return rows_.size(); }

  // Dense m x (n+1) augmented matrix (last column = rhs).
  std::vector<std::vector<Rational>> augmented() const;

 private:
  std::vector<VarKey> keys_;
  std::vector<bool> nonneg_;
  std::map<VarKey, int> index_;
  std::vector<std::map<int, Rational>> rows_;
  std::vector<Rational> rhs_;
};

enum class AffineKind { Unique, Infeasible, Affine };

struct AffineResult {
  AffineKind kind = AffineKind::Infeasible;
  std::vector<Rational> solution;                // particular solution (Unique/Affine)
  std::vector<std::vector<Rational>> kernel;     // basis of the homogeneous solutions
  int dimension() const { return static_cast<int>(kernel.size()); }
};

// Exact Gauss-Jordan elimination of the equalities; nonnegativity is ignored.
AffineResult solve_affine(const LinearSystem& system);

// Phase-1 simplex feasibility for {equalities, nonneg vars >= 0}.
std::optional<std::vector<Rational>> lp_feasible(const LinearSystem& system);

struct ExtremeResult {
  bool feasible = false;
  bool min_unbounded = false, max_unbounded = false;
  Rational min, max;
  std::vector<Rational> argmin, argmax;  // feasible witnesses
};

// Exact min and max of a coordinate (or a linear expression) over the
// feasible region. Bland's smallest-index rule guards against cycling.
ExtremeResult lp_extremes(const LinearSystem& system, const VarKey& objective);
ExtremeResult lp_extremes(const LinearSystem& system, const std::map<VarKey, Rational>& objective);

}  // namespace simpol::lp
