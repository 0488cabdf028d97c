#include "simpol/dist.hpp"

#include <sstream>
#include <stdexcept>

#include "simpol/errors.hpp"

namespace simpol {

OutcomeProfile::OutcomeProfile(std::map<VertexId, int> arity) : arity_(std::move(arity)) {
  for (const auto& [v, m] : arity_)
    if (m < 2) throw std::invalid_argument("outcome arity at " + v + " must be >= 2");
}

OutcomeProfile OutcomeProfile::uniform(const MeasurementSpace& space, int d) {
  std::map<VertexId, int> arity;
  for (const VertexId& v : space.vertices()) arity[v] = d;
  return OutcomeProfile(std::move(arity));
}

int OutcomeProfile::arity(const VertexId& v) const {
  auto it = arity_.find(v);
  if (it == arity_.end()) throw std::invalid_argument("no arity declared for vertex " + v);
  return it->second;
}

bool OutcomeProfile::covers(const MeasurementSpace& space) const {
  for (const VertexId& v : space.vertices())
    if (!arity_.count(v)) return false;
  return true;
}

bool OutcomeProfile::is_uniform() const {
  if (arity_.empty()) return true;
  int d = arity_.begin()->second;
  for (const auto& [v, m] : arity_)
    if (m != d) return false;
  return true;
}

int OutcomeProfile::uniform_arity() const {
  if (arity_.empty() || !is_uniform())
    throw std::invalid_argument("profile is not uniform");
  return arity_.begin()->second;
}

int OutcomeProfile::max_arity() const {
  int m = 0;
  for (const auto& [v, a] : arity_) m = std::max(m, a);
  return m;
}

OutcomeProfile OutcomeProfile::restricted_to(const MeasurementSpace& space) const {
  std::map<VertexId, int> arity;
  for (const VertexId& v : space.vertices()) arity[v] = this->arity(v);
  return OutcomeProfile(std::move(arity));
}

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), cells_(rows * cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("matrix dimensions must be positive");
}

RatMatrix RatMatrix::point_mass(int rows, int cols, int r, int c) {
  RatMatrix m(rows, cols);
  m.at(r, c) = 1;
  return m;
}

Rational& RatMatrix::at(int r, int c) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("matrix index out of range");
  return cells_[static_cast<std::size_t>(r) * cols_ + c];
}

const Rational& RatMatrix::at(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("matrix index out of range");
  return cells_[static_cast<std::size_t>(r) * cols_ + c];
}

std::vector<Rational> RatMatrix::row_sums() const {
  std::vector<Rational> sums(rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) sums[r] += at(r, c);
  return sums;
}

std::vector<Rational> RatMatrix::col_sums() const {
  std::vector<Rational> sums(cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) sums[c] += at(r, c);
  return sums;
}

Rational RatMatrix::total() const {
  Rational t = 0;
  for (const Rational& x : cells_) t += x;
  return t;
}

bool RatMatrix::is_diagonal() const {
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (r != c && at(r, c) != 0) return false;
  return true;
}

const RatMatrix& SimplicialDistribution::matrix(const EdgeId& e) const {
  auto it = matrices.find(e);
  if (it == matrices.end()) throw std::invalid_argument("no matrix for edge " + e);
  return it->second;
}

namespace {

void check_shapes(const SimplicialDistribution& p) {
  if (!p.profile.covers(p.space))
    throw std::invalid_argument("profile does not cover every vertex");
  for (const Edge& e : p.space.edges()) {
    const RatMatrix& m = p.matrix(e.id);
    if (m.rows() != p.profile.arity(e.src) || m.cols() != p.profile.arity(e.tgt)) {
      std::ostringstream msg;
      msg << "matrix shape mismatch on edge " << e.id << ": got " << m.rows() << "x" << m.cols()
          << ", expected " << p.profile.arity(e.src) << "x" << p.profile.arity(e.tgt);
      throw std::invalid_argument(msg.str());
    }
  }
  for (const auto& [id, m] : p.matrices)
    if (!p.space.has_edge(id)) throw std::invalid_argument("matrix for unknown edge " + id);
}

std::string vec_str(const std::vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += format_rational(v[i]);
  }
  return s + ")";
}

}  // namespace

std::vector<Violation> validate(const SimplicialDistribution& p) {
  check_shapes(p);
  std::vector<Violation> out;
  for (const Edge& e : p.space.edges()) {
    const RatMatrix& m = p.matrix(e.id);
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c)
        if (m.at(r, c) < 0)
          out.push_back({Violation::Kind::NegativeEntry, e.id, {},
                         "negative entry at (" + std::to_string(r) + "," + std::to_string(c) + ")"});
    if (m.total() != 1)
      out.push_back({Violation::Kind::BadTotal, e.id, {},
                     "entries sum to " + format_rational(m.total())});
  }
  // Marginal agreement at each vertex: every incident edge must induce the
  // same marginal (row sums for outgoing, column sums for incoming).
  for (const VertexId& v : p.space.vertices()) {
    std::optional<std::vector<Rational>> ref;
    EdgeId ref_edge;
    auto compare = [&](const EdgeId& id, std::vector<Rational> got) {
      if (!ref) {
        ref = std::move(got);
        ref_edge = id;
      } else if (*ref != got) {
        out.push_back({Violation::Kind::MarginalMismatch, id, v,
                       "edge " + ref_edge + " gives " + vec_str(*ref) + ", edge " + id +
                           " gives " + vec_str(got)});
      }
    };
    for (const EdgeId& id : p.space.out_edges(v)) compare(id, p.matrix(id).row_sums());
    for (const EdgeId& id : p.space.in_edges(v)) compare(id, p.matrix(id).col_sums());
  }
  return out;
}

bool is_valid(const SimplicialDistribution& p) { return validate(p).empty(); }

std::vector<Rational> marginal(const SimplicialDistribution& p, const VertexId& v) {
  if (!p.space.has_vertex(v)) throw std::invalid_argument("unknown vertex id: " + v);
  if (!p.space.out_edges(v).empty()) return p.matrix(p.space.out_edges(v).front()).row_sums();
  if (!p.space.in_edges(v).empty()) return p.matrix(p.space.in_edges(v).front()).col_sums();
  throw std::invalid_argument("vertex " + v + " is isolated; no marginal");
}

SimplicialDistribution deterministic(const MeasurementSpace& space, const OutcomeProfile& profile,
                                     const Section& phi) {
  SimplicialDistribution p{space, profile, {}};
  for (const VertexId& v : space.vertices()) {
    auto it = phi.find(v);
    if (it == phi.end()) throw std::invalid_argument("section missing vertex " + v);
    if (it->second < 0 || it->second >= profile.arity(v))
      throw std::invalid_argument("section outcome out of range at " + v);
  }
  for (const Edge& e : space.edges())
    p.matrices[e.id] = RatMatrix::point_mass(profile.arity(e.src), profile.arity(e.tgt),
                                             phi.at(e.src), phi.at(e.tgt));
  return p;
}

SimplicialDistribution mix(const std::vector<std::pair<Rational, SimplicialDistribution>>& terms) {
  if (terms.empty()) throw std::invalid_argument("mix of zero terms");
  Rational total = 0;
  for (const auto& [w, q] : terms) {
    if (w < 0) throw std::invalid_argument("negative mixture weight");
    total += w;
    if (!(q.space == terms.front().second.space) || !(q.profile == terms.front().second.profile))
      throw std::invalid_argument("mixture terms on different scenarios");
  }
  if (total != 1) throw std::invalid_argument("mixture weights sum to " + format_rational(total));

  SimplicialDistribution out{terms.front().second.space, terms.front().second.profile, {}};
  for (const Edge& e : out.space.edges()) {
    RatMatrix m(out.profile.arity(e.src), out.profile.arity(e.tgt));
    for (const auto& [w, q] : terms) {
      const RatMatrix& qm = q.matrix(e.id);
      for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) m.at(r, c) += w * qm.at(r, c);
    }
    out.matrices[e.id] = std::move(m);
  }
  return out;
}

bool preceq(const SimplicialDistribution& q, const SimplicialDistribution& p) {
  if (!(q.space == p.space) || !(q.profile == p.profile))
    throw std::invalid_argument("preorder comparison across different scenarios");
  for (const Edge& e : p.space.edges()) {
    const RatMatrix& qm = q.matrix(e.id);
    const RatMatrix& pm = p.matrix(e.id);
    for (int r = 0; r < qm.rows(); ++r)
      for (int c = 0; c < qm.cols(); ++c)
        if (qm.at(r, c) != 0 && pm.at(r, c) == 0) return false;
  }
  return true;
}

ExtractResult extract(const SimplicialDistribution& q, const SimplicialDistribution& p) {
  if (!preceq(q, p)) throw std::invalid_argument("extract requires q preceq p");
  std::optional<Rational> alpha;
  for (const Edge& e : p.space.edges()) {
    const RatMatrix& qm = q.matrix(e.id);
    const RatMatrix& pm = p.matrix(e.id);
    for (int r = 0; r < qm.rows(); ++r)
      for (int c = 0; c < qm.cols(); ++c)
        if (qm.at(r, c) != 0) {
          Rational ratio = pm.at(r, c) / qm.at(r, c);
          if (!alpha || ratio < *alpha) alpha = ratio;
        }
  }
  if (!alpha) alpha = 1;  // edgeless space
  if (*alpha == 1) return {Rational(1), std::nullopt};

  SimplicialDistribution residual{p.space, p.profile, {}};
  Rational rest = 1 - *alpha;
  for (const Edge& e : p.space.edges()) {
    const RatMatrix& qm = q.matrix(e.id);
    const RatMatrix& pm = p.matrix(e.id);
    RatMatrix m(pm.rows(), pm.cols());
    for (int r = 0; r < pm.rows(); ++r)
      for (int c = 0; c < pm.cols(); ++c)
        m.at(r, c) = (pm.at(r, c) - *alpha * qm.at(r, c)) / rest;
    residual.matrices[e.id] = std::move(m);
  }
  return {*alpha, std::move(residual)};
}

std::set<SupportCell> support_pattern(const SimplicialDistribution& p) {
  std::set<SupportCell> cells;
  for (const Edge& e : p.space.edges()) {
    const RatMatrix& m = p.matrix(e.id);
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c)
        if (m.at(r, c) != 0) cells.insert({e.id, r, c});
  }
  return cells;
}

bool section_supported(const SimplicialDistribution& p, const Section& phi) {
  for (const Edge& e : p.space.edges())
    if (p.matrix(e.id).at(phi.at(e.src), phi.at(e.tgt)) == 0) return false;
  return true;
}

SimplicialDistribution transport_collapse(const SimplicialDistribution& p,
                                          const CollapseResult& collapse) {
  for (const EdgeId& id : collapse.collapsed) {
    const RatMatrix& m = p.matrix(id);
    if (m.rows() != m.cols() || !m.is_diagonal())
      throw NotCollapsibleError("edge " + id + " carries off-diagonal mass; cannot collapse");
  }
  SimplicialDistribution out{collapse.space, {}, {}};
  std::map<VertexId, int> arity;
  for (const VertexId& v : collapse.space.vertices()) arity[v] = p.profile.arity(v);
  out.profile = OutcomeProfile(std::move(arity));
  for (const auto& [old_id, new_id] : collapse.edge_map) out.matrices[new_id] = p.matrix(old_id);
  return out;
}

bool is_deterministic(const SimplicialDistribution& p) {
  return deterministic_section(p).has_value();
}

std::optional<Section> deterministic_section(const SimplicialDistribution& p) {
  Section phi;
  auto record = [&](const VertexId& v, int outcome) {
    auto it = phi.find(v);
    if (it == phi.end()) {
      phi[v] = outcome;
      return true;
    }
    return it->second == outcome;
  };
  for (const Edge& e : p.space.edges()) {
    const RatMatrix& m = p.matrix(e.id);
    int hits = 0, row = -1, col = -1;
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c)
        if (m.at(r, c) != 0) {
          ++hits;
          row = r;
          col = c;
        }
    if (hits != 1 || m.at(row, col) != 1) return std::nullopt;
    if (!record(e.src, row) || !record(e.tgt, col)) return std::nullopt;
  }
  // Isolated vertices carry no edge data; pin them to outcome 0.
  for (const VertexId& v : p.space.vertices())
    if (!phi.count(v)) phi[v] = 0;
  return phi;
}

}  // namespace simpol
