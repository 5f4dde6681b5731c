#pragma once

#include <prym/cover.hpp>
#include <prym/graph.hpp>

#include <array>
#include <optional>
#include <sstream>
#include <string>

namespace prym::dot {

namespace detail {

inline std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

inline constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                                        "#9467bd", "#8c564b", "#e377c2", "#17becf"};

}  // namespace detail

/// Undirected multigraph; vertices labelled "id:genus", edges in `sigma`
/// drawn dashed.
inline std::string to_dot(const Multigraph& g, const std::optional<EdgeSubset>& sigma = std::nullopt) {
  std::ostringstream os;
  os << "graph G {\n";
  for (const auto& v : g.vertices())
    os << "  " << detail::quote(v.id) << " [label=" << detail::quote(v.id + ":" + std::to_string(v.genus)) << "];\n";
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    os << "  " << detail::quote(g.vertex(e.u).id) << " -- " << detail::quote(g.vertex(e.v).id)
       << " [label=" << detail::quote(e.id);
    if (sigma && sigma->contains(i)) os << ", style=dashed";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

/// Cover graph; each involution orbit (of vertices, of edges) gets one
/// colour, fixed edges are drawn bold and tagged.
inline std::string to_dot(const CoverGraph& cg) {
  const Multigraph& c = cg.cover;
  std::ostringstream os;
  os << "graph C {\n";
  std::vector<std::size_t> orbit(c.vertex_count(), 0);
  std::size_t next = 0;
  for (std::size_t v = 0; v < c.vertex_count(); ++v)
    orbit[v] = cg.vertex_involution[v] < v ? orbit[cg.vertex_involution[v]] : next++;
  for (std::size_t v = 0; v < c.vertex_count(); ++v) {
    const auto& x = c.vertex(v);
    os << "  " << detail::quote(x.id) << " [label=" << detail::quote(x.id + ":" + std::to_string(x.genus))
       << ", color=" << detail::quote(detail::kPalette[orbit[v] % detail::kPalette.size()]) << "];\n";
  }
  std::vector<std::size_t> edge_orbit(c.edge_count(), 0);
  next = 0;
  for (std::size_t e = 0; e < c.edge_count(); ++e)
    edge_orbit[e] = cg.edge_involution[e] < e ? edge_orbit[cg.edge_involution[e]] : next++;
  for (std::size_t e = 0; e < c.edge_count(); ++e) {
    const Edge& x = c.edge(e);
    const bool fixed = cg.edge_involution[e] == e;
    os << "  " << detail::quote(c.vertex(x.u).id) << " -- " << detail::quote(c.vertex(x.v).id)
       << " [label=" << detail::quote(fixed ? x.id + " (fixed)" : x.id)
       << ", color=" << detail::quote(detail::kPalette[edge_orbit[e] % detail::kPalette.size()]);
    if (fixed) os << ", penwidth=3";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace prym::dot
