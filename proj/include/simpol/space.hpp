#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace simpol {

using VertexId = std::string;
using EdgeId = std::string;

struct Edge {
  EdgeId id;
  VertexId src;  // d1 face
  VertexId tgt;  // d0 face
  bool operator==(const Edge&) const = default;
};

// A 1-dimensional measurement space: a directed multigraph with stable
// string ids. Parallel edges and opposite-orientation pairs are allowed;
// loops (src == tgt) are rejected at construction. Immutable once built.
class MeasurementSpace {
 public:
  MeasurementSpace() = default;
  MeasurementSpace(std::vector<VertexId> vertices, std::vector<Edge> edges);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_vertex(const VertexId& v) const { return vertex_index_.count(v) > 0; }
  bool has_edge(const EdgeId& e) const { return edge_index_.count(e) > 0; }
  const Edge& edge(const EdgeId& e) const;

  // Incident edge ids in declaration order.
  const std::vector<EdgeId>& out_edges(const VertexId& v) const;
  const std::vector<EdgeId>& in_edges(const VertexId& v) const;

  bool operator==(const MeasurementSpace& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_;
  }

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::map<VertexId, std::size_t> vertex_index_;
  std::map<EdgeId, std::size_t> edge_index_;
  std::map<VertexId, std::vector<EdgeId>> out_;
  std::map<VertexId, std::vector<EdgeId>> in_;
};

// The n-circle C^(n): vertices v1..vn, edges s1..sn with si: vi -> v(i+1)
// and sn closing back to v1. Requires n >= 2.
MeasurementSpace make_cycle(int n);

// A directed path: vertices v1..v(n+1), edges si: vi -> v(i+1). Requires n >= 1.
MeasurementSpace make_path(int n);

// Full subspace spanned by the given edges and their endpoints; ids and
// relative order are preserved. The empty subset yields the empty space.
MeasurementSpace restrict_space(const MeasurementSpace& space, const std::set<EdgeId>& edge_subset);

// Vertices present in both spaces (comparable when extracted from a common parent).
std::set<VertexId> intersection_vertices(const MeasurementSpace& a, const MeasurementSpace& b);

struct CollapseResult {
  MeasurementSpace space;                 // the quotient
  std::map<VertexId, VertexId> vertex_map;  // old vertex -> quotient vertex
  std::map<EdgeId, EdgeId> edge_map;        // surviving old edge -> quotient edge
  std::set<EdgeId> collapsed;               // the deleted edges
  std::vector<std::string> warnings;
};

// Quotient identifying the endpoints of every edge in collapse_set and
// deleting those edges. Each merged class is named after its first member
// in the parent's vertex order.
CollapseResult collapse_edges(const MeasurementSpace& space, const std::set<EdgeId>& collapse_set);

// Edge ids in traversal order when the space is a single directed cycle
// covering every vertex and edge (each vertex has in- and out-degree 1);
// nullopt otherwise. The walk starts at the first declared vertex.
std::optional<std::vector<EdgeId>> directed_cycle_order(const MeasurementSpace& space);

// True when the underlying undirected multigraph is acyclic.
bool is_forest(const MeasurementSpace& space);

}  // namespace simpol
