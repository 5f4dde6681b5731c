#pragma once

#include <prym/graph.hpp>

#include <bit>
#include <cstdint>
#include <vector>

namespace prym {

/// Default refusal threshold on b1 for exhaustive enumeration of the cycle space.
inline constexpr unsigned kDefaultEnumerationCap = 24;

/// All valencies of `sub` even; a loop always contributes 2.
inline bool is_eulerian(const Multigraph& g, const EdgeSubset& sub) {
  for (auto v : valency_profile(g, sub))
    if (v % 2 != 0) return false;
  return true;
}

/// The GF(2) cycle space of a graph, given by a fundamental-cycle basis.
struct CycleSpace {
  std::size_t edge_count = 0;
  std::vector<EdgeSubset> basis;

  std::size_t rank() const noexcept { return basis.size(); }
};

/// Fundamental cycles of a DFS spanning forest. The forest is grown from the
/// lowest-index unvisited vertex, scanning incident edges in edge order, so
/// the basis depends only on edge-id order. Basis element k belongs to the
/// k-th non-tree edge.
inline CycleSpace cycle_basis(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    incident[g.edge(i).u].push_back(i);
    if (!g.edge(i).is_loop()) incident[g.edge(i).v].push_back(i);
  }

  constexpr auto kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent_edge(n, kNone);
  std::vector<std::size_t> depth(n, 0);
  std::vector<bool> visited(n, false);
  std::vector<bool> tree_edge(g.edge_count(), false);

  for (std::size_t root = 0; root < n; ++root) {
    if (visited[root]) continue;
    visited[root] = true;
    // Iterative DFS with per-vertex cursor into the incidence list.
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    while (!stack.empty()) {
      auto& [v, cursor] = stack.back();
      if (cursor == incident[v].size()) {
        stack.pop_back();
        continue;
      }
      const std::size_t ei = incident[v][cursor++];
      const Edge& e = g.edge(ei);
      const std::size_t w = e.u == v ? e.v : e.u;
      if (visited[w]) continue;
      visited[w] = true;
      tree_edge[ei] = true;
      parent_edge[w] = ei;
      depth[w] = depth[v] + 1;
      stack.emplace_back(w, 0);
    }
  }

  auto parent_of = [&](std::size_t v) {
    const Edge& e = g.edge(parent_edge[v]);
    return e.u == v ? e.v : e.u;
  };

  CycleSpace cs;
  cs.edge_count = g.edge_count();
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (tree_edge[i]) continue;
    EdgeSubset cycle(g.edge_count());
    cycle.insert(i);
    std::size_t a = g.edge(i).u;
    std::size_t b = g.edge(i).v;
    while (a != b) {
      if (depth[a] < depth[b]) std::swap(a, b);
      cycle.insert(parent_edge[a]);
      a = parent_of(a);
    }
    cs.basis.push_back(std::move(cycle));
  }
  return cs;
}

/// Visits every eulerian subgraph exactly once in Gray-code order over the
/// basis, starting with the empty set. Throws CapExceeded when b1 > cap.
template <class Visitor>
void for_each_eulerian(const Multigraph& g, Visitor&& visit, unsigned cap = kDefaultEnumerationCap) {
  const CycleSpace cs = cycle_basis(g);
  if (cs.rank() > cap || cs.rank() >= 63)
    throw Error(ErrorKind::CapExceeded, "cycle space has rank " + std::to_string(cs.rank()) +
                                            ", enumeration cap is " + std::to_string(cap));
  EdgeSubset current(g.edge_count());
  visit(static_cast<const EdgeSubset&>(current));
  const std::uint64_t total = std::uint64_t{1} << cs.rank();
  for (std::uint64_t i = 1; i < total; ++i) {
    current ^= cs.basis[static_cast<std::size_t>(std::countr_zero(i))];
    visit(static_cast<const EdgeSubset&>(current));
  }
}

inline std::vector<EdgeSubset> enumerate_eulerian(const Multigraph& g, unsigned cap = kDefaultEnumerationCap) {
  std::vector<EdgeSubset> out;
  for_each_eulerian(g, [&](const EdgeSubset& s) { out.push_back(s); }, cap);
  return out;
}

}  // namespace prym
