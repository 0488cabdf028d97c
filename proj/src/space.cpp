#include "simpol/space.hpp"

#include <algorithm>
#include <stdexcept>

namespace simpol {

MeasurementSpace::MeasurementSpace(std::vector<VertexId> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!vertex_index_.emplace(vertices_[i], i).second)
      throw std::invalid_argument("duplicate vertex id: " + vertices_[i]);
    out_[vertices_[i]];
    in_[vertices_[i]];
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (!edge_index_.emplace(e.id, i).second)
      throw std::invalid_argument("duplicate edge id: " + e.id);
    if (!has_vertex(e.src) || !has_vertex(e.tgt))
      throw std::invalid_argument("edge " + e.id + " references an undeclared vertex");
    if (e.src == e.tgt)
      throw std::invalid_argument("loop edge " + e.id + " is not supported");
    out_[e.src].push_back(e.id);
    in_[e.tgt].push_back(e.id);
  }
}

const Edge& MeasurementSpace::edge(const EdgeId& e) const {
  auto it = edge_index_.find(e);
  if (it == edge_index_.end()) throw std::invalid_argument("unknown edge id: " + e);
  return edges_[it->second];
}

const std::vector<EdgeId>& MeasurementSpace::out_edges(const VertexId& v) const {
  auto it = out_.find(v);
  if (it == out_.end()) throw std::invalid_argument("unknown vertex id: " + v);
  return it->second;
}

const std::vector<EdgeId>& MeasurementSpace::in_edges(const VertexId& v) const {
  auto it = in_.find(v);
  if (it == in_.end()) throw std::invalid_argument("unknown vertex id: " + v);
  return it->second;
}

MeasurementSpace make_cycle(int n) {
  if (n < 2) throw std::invalid_argument("a cycle needs at least 2 edges");
  std::vector<VertexId> vs;
  std::vector<Edge> es;
  for (int i = 1; i <= n; ++i) vs.push_back("v" + std::to_string(i));
  for (int i = 1; i <= n; ++i) {
    es.push_back({"s" + std::to_string(i), "v" + std::to_string(i),
                  "v" + std::to_string(i == n ? 1 : i + 1)});
  }
  return MeasurementSpace(std::move(vs), std::move(es));
}

MeasurementSpace make_path(int n) {
  if (n < 1) throw std::invalid_argument("a path needs at least 1 edge");
  std::vector<VertexId> vs;
  std::vector<Edge> es;
  for (int i = 1; i <= n + 1; ++i) vs.push_back("v" + std::to_string(i));
  for (int i = 1; i <= n; ++i)
    es.push_back({"s" + std::to_string(i), "v" + std::to_string(i), "v" + std::to_string(i + 1)});
  return MeasurementSpace(std::move(vs), std::move(es));
}

MeasurementSpace restrict_space(const MeasurementSpace& space, const std::set<EdgeId>& edge_subset) {
  for (const EdgeId& e : edge_subset)
    if (!space.has_edge(e)) throw std::invalid_argument("unknown edge id: " + e);
  std::set<VertexId> touched;
  std::vector<Edge> es;
  for (const Edge& e : space.edges()) {
    if (edge_subset.count(e.id)) {
      es.push_back(e);
      touched.insert(e.src);
      touched.insert(e.tgt);
    }
  }
  std::vector<VertexId> vs;
  for (const VertexId& v : space.vertices())
    if (touched.count(v)) vs.push_back(v);
  return MeasurementSpace(std::move(vs), std::move(es));
}

std::set<VertexId> intersection_vertices(const MeasurementSpace& a, const MeasurementSpace& b) {
  std::set<VertexId> result;
  for (const VertexId& v : a.vertices())
    if (b.has_vertex(v)) result.insert(v);
  return result;
}

namespace {

// Union-find over vertex indices.
struct Dsu {
  std::vector<std::size_t> parent;
  explicit Dsu(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool merge(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    // Keep the smaller index as representative so naming follows vertex order.
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

std::map<VertexId, std::size_t> index_of(const MeasurementSpace& space) {
  std::map<VertexId, std::size_t> idx;
  for (std::size_t i = 0; i < space.vertices().size(); ++i) idx[space.vertices()[i]] = i;
  return idx;
}

}  // namespace

CollapseResult collapse_edges(const MeasurementSpace& space, const std::set<EdgeId>& collapse_set) {
  for (const EdgeId& e : collapse_set)
    if (!space.has_edge(e)) throw std::invalid_argument("unknown edge id: " + e);

  auto idx = index_of(space);
  Dsu dsu(space.vertex_count());
  CollapseResult result;
  for (const Edge& e : space.edges()) {
    if (!collapse_set.count(e.id)) continue;
    if (!dsu.merge(idx[e.src], idx[e.tgt]))
      result.warnings.push_back("collapse set contains a cycle through edge " + e.id);
  }

  std::vector<VertexId> vs;
  for (std::size_t i = 0; i < space.vertex_count(); ++i) {
    std::size_t rep = dsu.find(i);
    result.vertex_map[space.vertices()[i]] = space.vertices()[rep];
    if (rep == i) vs.push_back(space.vertices()[i]);
  }

  std::vector<Edge> es;
  for (const Edge& e : space.edges()) {
    if (collapse_set.count(e.id)) {
      result.collapsed.insert(e.id);
      continue;
    }
    es.push_back({e.id, result.vertex_map[e.src], result.vertex_map[e.tgt]});
    result.edge_map[e.id] = e.id;
  }

  // Drop vertices that became isolated only if they were merged away;
  // representatives always survive, even with no remaining edges.
  result.space = MeasurementSpace(std::move(vs), std::move(es));
  return result;
}

std::optional<std::vector<EdgeId>> directed_cycle_order(const MeasurementSpace& space) {
  if (space.edge_count() == 0 || space.edge_count() != space.vertex_count()) return std::nullopt;
  for (const VertexId& v : space.vertices())
    if (space.out_edges(v).size() != 1 || space.in_edges(v).size() != 1) return std::nullopt;
  std::vector<EdgeId> order;
  VertexId start = space.vertices().front();
  VertexId cur = start;
  for (std::size_t step = 0; step < space.edge_count(); ++step) {
    const Edge& e = space.edge(space.out_edges(cur).front());
    order.push_back(e.id);
    cur = e.tgt;
  }
  if (cur != start) return std::nullopt;
  std::set<EdgeId> seen(order.begin(), order.end());
  if (seen.size() != space.edge_count()) return std::nullopt;
  return order;
}

bool is_forest(const MeasurementSpace& space) {
  auto idx = index_of(space);
  Dsu dsu(space.vertex_count());
  for (const Edge& e : space.edges())
    if (!dsu.merge(idx[e.src], idx[e.tgt])) return false;
  return true;
}

}  // namespace simpol
