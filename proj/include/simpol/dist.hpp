#pragma once

#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "simpol/rational.hpp"
#include "simpol/space.hpp"

namespace simpol {

// Per-vertex outcome arities m_v >= 2. A uniform profile (all m_v = d)
// models outcomes in Z_d.
class OutcomeProfile {
 public:
  OutcomeProfile() = default;
  explicit OutcomeProfile(std::map<VertexId, int> arity);
  static OutcomeProfile uniform(const MeasurementSpace& space, int d);

  int arity(const VertexId& v) const;
  bool covers(const MeasurementSpace& space) const;
  bool is_uniform() const;
  int uniform_arity() const;  // throws when not uniform
  int max_arity() const;
  OutcomeProfile restricted_to(const MeasurementSpace& space) const;
  const std::map<VertexId, int>& arities() const { return arity_; }

  bool operator==(const OutcomeProfile&) const = default;

 private:
  std::map<VertexId, int> arity_;
};

// Dense matrix of exact rationals. Row index = source outcome (d1 face),
// column index = target outcome (d0 face).
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols);
  static RatMatrix point_mass(int rows, int cols, int r, int c);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c);
  const Rational& at(int r, int c) const;

  std::vector<Rational> row_sums() const;
  std::vector<Rational> col_sums() const;
  Rational total() const;
  bool is_diagonal() const;

  bool operator==(const RatMatrix&) const = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> cells_;
};

// A global outcome assignment (one outcome per vertex).
using Section = std::map<VertexId, int>;

// A supported cell: (edge, source outcome, target outcome).
using SupportCell = std::tuple<EdgeId, int, int>;

struct SimplicialDistribution {
  MeasurementSpace space;
  OutcomeProfile profile;
  std::map<EdgeId, RatMatrix> matrices;

  const RatMatrix& matrix(const EdgeId& e) const;
  bool operator==(const SimplicialDistribution&) const = default;
};

struct Violation {
  enum class Kind { NegativeEntry, BadTotal, MarginalMismatch };
  Kind kind;
  EdgeId edge;      // offending edge (NegativeEntry, BadTotal) or the compared edge
  VertexId vertex;  // set for MarginalMismatch
  std::string detail;
};

// Structural problems (missing or misshaped matrices) throw; probabilistic
// violations are returned. Empty result means valid.
std::vector<Violation> validate(const SimplicialDistribution& p);
bool is_valid(const SimplicialDistribution& p);

// The common vertex marginal, computed from the first incident edge.
// Requires a valid distribution; isolated vertices have no marginal.
std::vector<Rational> marginal(const SimplicialDistribution& p, const VertexId& v);

// delta^phi: every edge carries the point mass at (phi(src), phi(tgt)).
SimplicialDistribution deterministic(const MeasurementSpace& space, const OutcomeProfile& profile,
                                     const Section& phi);

// Entrywise convex combination. Weights must be nonnegative and sum to 1;
// all terms must live on the same space and profile.
SimplicialDistribution mix(const std::vector<std::pair<Rational, SimplicialDistribution>>& terms);

// The preorder: q <= p iff every nonzero cell of q is nonzero in p.
bool preceq(const SimplicialDistribution& q, const SimplicialDistribution& p);

struct ExtractResult {
  Rational alpha;
  std::optional<SimplicialDistribution> residual;  // empty iff alpha == 1 (p == q)
};

// Writes p = alpha*q + (1-alpha)*residual with alpha maximal; requires q <= p.
ExtractResult extract(const SimplicialDistribution& q, const SimplicialDistribution& p);

std::set<SupportCell> support_pattern(const SimplicialDistribution& p);

// Is phi in supp(p), checking the generating edges.
bool section_supported(const SimplicialDistribution& p, const Section& phi);

// Transport through an edge collapse: every collapsed edge must carry a
// diagonal matrix. Surviving edges keep their matrices, re-indexed through
// the vertex map.
SimplicialDistribution transport_collapse(const SimplicialDistribution& p,
                                          const CollapseResult& collapse);

bool is_deterministic(const SimplicialDistribution& p);
std::optional<Section> deterministic_section(const SimplicialDistribution& p);

}  // namespace simpol
