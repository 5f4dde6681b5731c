#pragma once

#include <prym/error.hpp>

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace prym {

struct Vertex {
  std::string id;
  std::uint64_t genus = 0;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// An edge is a node of the curve; `u == v` encodes a self-node (loop).
struct Edge {
  std::string id;
  std::size_t u = 0;
  std::size_t v = 0;

  bool is_loop() const noexcept { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns false when a and b were already joined.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

/// Genus-weighted multigraph with explicit edge ids. Only structural
/// validation happens here; stability lives in DualGraph.
class Multigraph {
 public:
  Multigraph() = default;

  Multigraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
      : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::unordered_map<std::string, std::size_t> seen;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (!seen.emplace(vertices_[i].id, i).second)
        throw Error(ErrorKind::InvalidGraph, "duplicate vertex id '" + vertices_[i].id + "'");
    }
    vertex_index_ = std::move(seen);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge& e = edges_[i];
      if (e.u >= vertices_.size() || e.v >= vertices_.size())
        throw Error(ErrorKind::InvalidGraph, "edge '" + e.id + "' has an endpoint out of range");
      if (!edge_index_.emplace(e.id, i).second)
        throw Error(ErrorKind::InvalidGraph, "duplicate edge id '" + e.id + "'");
    }
  }

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Vertex& vertex(std::size_t i) const { return vertices_.at(i); }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  std::size_t vertex_index(const std::string& id) const {
    auto it = vertex_index_.find(id);
    if (it == vertex_index_.end()) throw Error(ErrorKind::InvalidGraph, "unknown vertex id '" + id + "'");
    return it->second;
  }

  std::size_t edge_index(const std::string& id) const {
    auto it = edge_index_.find(id);
    if (it == edge_index_.end()) throw Error(ErrorKind::InvalidGraph, "unknown edge id '" + id + "'");
    return it->second;
  }

  /// Sum of the vertex genera (the genus of the normalization).
  std::uint64_t genus_sum() const noexcept {
    std::uint64_t s = 0;
    for (const auto& v : vertices_) s += v.genus;
    return s;
  }

  /// Half-edge count at `v`; a loop contributes 2.
  std::size_t valency(std::size_t v) const {
    std::size_t n = 0;
    for (const auto& e : edges_) n += (e.u == v) + (e.v == v);
    return n;
  }

  std::size_t component_count() const {
    detail::DisjointSets ds(vertices_.size());
    std::size_t c = vertices_.size();
    for (const auto& e : edges_) c -= ds.unite(e.u, e.v);
    return c;
  }

  bool is_connected() const { return !vertices_.empty() && component_count() == 1; }

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, std::size_t> vertex_index_;
  std::unordered_map<std::string, std::size_t> edge_index_;
};

/// b1 = |E| - |V| + #components.
inline std::size_t betti1(const Multigraph& g) {
  return g.edge_count() + g.component_count() - g.vertex_count();
}

/// Arithmetic genus: sum of genera plus the first Betti number.
inline std::uint64_t total_genus(const Multigraph& g) { return g.genus_sum() + betti1(g); }

inline bool is_stable(const Multigraph& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto lhs = 2 * static_cast<std::int64_t>(g.vertex(v).genus) + static_cast<std::int64_t>(g.valency(v));
    if (lhs <= 2) return false;
  }
  return total_genus(g) >= 2;
}

/// Connected stable dual graph of a curve of genus >= 2.
class DualGraph : public Multigraph {
 public:
  DualGraph() = default;

  explicit DualGraph(Multigraph g) : Multigraph(std::move(g)) {
    if (!is_connected()) throw Error(ErrorKind::NotStable, "dual graph is not connected");
    for (std::size_t v = 0; v < vertex_count(); ++v) {
      const auto lhs = 2 * static_cast<std::int64_t>(vertex(v).genus) + static_cast<std::int64_t>(valency(v));
      if (lhs <= 2)
        throw Error(ErrorKind::NotStable, "vertex '" + vertex(v).id + "' violates 2*genus - 2 + valency > 0");
    }
    if (total_genus(*this) < 2) throw Error(ErrorKind::NotStable, "total genus is below 2");
  }

  DualGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
      : DualGraph(Multigraph(std::move(vertices), std::move(edges))) {}

  std::uint64_t genus() const { return total_genus(*this); }
};

/// A set of edges of a fixed multigraph, indexed by edge position.
class EdgeSubset {
 public:
  EdgeSubset() = default;
  explicit EdgeSubset(std::size_t edge_count) : bits_(edge_count) {}
  explicit EdgeSubset(boost::dynamic_bitset<> bits) : bits_(std::move(bits)) {}

  static EdgeSubset full(std::size_t edge_count) {
    EdgeSubset s(edge_count);
    s.bits_.set();
    return s;
  }

  static EdgeSubset of(std::size_t edge_count, std::initializer_list<std::size_t> members) {
    EdgeSubset s(edge_count);
    for (auto m : members) s.insert(m);
    return s;
  }

  static EdgeSubset from_ids(const Multigraph& g, const std::vector<std::string>& ids) {
    EdgeSubset s(g.edge_count());
    for (const auto& id : ids) s.insert(g.edge_index(id));
    return s;
  }

  std::size_t universe() const noexcept { return bits_.size(); }
  std::size_t size() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }
  bool contains(std::size_t e) const { return bits_.test(e); }

  void insert(std::size_t e) {
    if (e >= bits_.size()) throw Error(ErrorKind::InvalidGraph, "edge index out of range for subset");
    bits_.set(e);
  }
  void erase(std::size_t e) { bits_.reset(e); }

  EdgeSubset complement() const { return EdgeSubset(~bits_); }

  EdgeSubset& operator^=(const EdgeSubset& o) {
    bits_ ^= o.bits_;
    return *this;
  }
  friend EdgeSubset operator^(EdgeSubset a, const EdgeSubset& b) { return a ^= b; }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos; i = bits_.find_next(i)) out.push_back(i);
    return out;
  }

  std::vector<std::string> ids(const Multigraph& g) const {
    std::vector<std::string> out;
    for (auto i : indices()) out.push_back(g.edge(i).id);
    return out;
  }

  const boost::dynamic_bitset<>& bits() const noexcept { return bits_; }

  friend bool operator==(const EdgeSubset& a, const EdgeSubset& b) { return a.bits_ == b.bits_; }
  // Ordering: cardinality first, then the sorted edge-index sequence.
  friend bool operator<(const EdgeSubset& a, const EdgeSubset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.indices() < b.indices();
  }

 private:
  boost::dynamic_bitset<> bits_;
};

inline void require_subset_of(const Multigraph& g, const EdgeSubset& s) {
  if (s.universe() != g.edge_count())
    throw Error(ErrorKind::InvalidGraph, "edge subset does not belong to this graph");
}

/// b1 of the subgraph spanned by `sub`, computed on edge-incident vertices.
inline std::size_t subgraph_betti1(const Multigraph& g, const EdgeSubset& sub) {
  require_subset_of(g, sub);
  detail::DisjointSets ds(g.vertex_count());
  std::size_t cycles = 0;
  for (auto i : sub.indices()) {
    const Edge& e = g.edge(i);
    if (!ds.unite(e.u, e.v)) ++cycles;
  }
  return cycles;
}

/// Number of half-edges of `sub` at each vertex (index-aligned with
/// g.vertices()); a loop counts twice.
inline std::vector<std::size_t> valency_profile(const Multigraph& g, const EdgeSubset& sub) {
  require_subset_of(g, sub);
  std::vector<std::size_t> val(g.vertex_count(), 0);
  for (auto i : sub.indices()) {
    ++val[g.edge(i).u];
    ++val[g.edge(i).v];
  }
  return val;
}

/// A stable curve with the nodes in `blown` replaced by exceptional
/// rational bridges. Components are numbered base vertices first, then one
/// exceptional component per blown edge in increasing edge order.
class QuasistableModel {
 public:
  QuasistableModel(DualGraph base, EdgeSubset blown) : base_(std::move(base)), blown_(std::move(blown)) {
    require_subset_of(base_, blown_);
    exceptional_edges_ = blown_.indices();
  }

  const DualGraph& base() const noexcept { return base_; }
  const EdgeSubset& blown() const noexcept { return blown_; }
  EdgeSubset delta() const { return blown_.complement(); }

  std::size_t base_component_count() const noexcept { return base_.vertex_count(); }
  std::size_t component_count() const noexcept { return base_.vertex_count() + exceptional_edges_.size(); }
  bool is_exceptional(std::size_t c) const noexcept { return c >= base_.vertex_count(); }

  /// Base edge carrying exceptional component `c`.
  std::size_t exceptional_edge(std::size_t c) const { return exceptional_edges_.at(c - base_.vertex_count()); }
  const std::vector<std::size_t>& exceptional_edges() const noexcept { return exceptional_edges_; }

  std::string component_id(std::size_t c) const {
    if (!is_exceptional(c)) return base_.vertex(c).id;
    return "E(" + base_.edge(exceptional_edge(c)).id + ")";
  }

  std::uint64_t component_genus(std::size_t c) const { return is_exceptional(c) ? 0 : base_.vertex(c).genus; }

  /// Blown half-edges at each base vertex (m_v).
  std::vector<std::size_t> blown_valency() const { return valency_profile(base_, blown_); }

  /// Dual graph of X. Unblown edges keep their ids; a blown edge `e`
  /// becomes `e/1` (first end to E) and `e/2` (E to second end).
  Multigraph curve_graph() const {
    std::vector<Vertex> vs;
    vs.reserve(component_count());
    for (std::size_t c = 0; c < component_count(); ++c) vs.push_back({component_id(c), component_genus(c)});
    std::vector<Edge> es;
    std::size_t next_exc = base_.vertex_count();
    for (std::size_t i = 0; i < base_.edge_count(); ++i) {
      const Edge& e = base_.edge(i);
      if (!blown_.contains(i)) {
        es.push_back(e);
        continue;
      }
      es.push_back({e.id + "/1", e.u, next_exc});
      es.push_back({e.id + "/2", next_exc, e.v});
      ++next_exc;
    }
    return Multigraph(std::move(vs), std::move(es));
  }

 private:
  DualGraph base_;
  EdgeSubset blown_;
  std::vector<std::size_t> exceptional_edges_;
};

}  // namespace prym
