#pragma once

#include <prym/cycle_space.hpp>
#include <prym/fiber.hpp>
#include <prym/graph.hpp>

#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

namespace prym {

enum class SheetType { split, connected };

/// Combinatorial monodromy of a double cover over (G, Sigma).
/// `sheets` is keyed by the vertices with no blown half-edge (m_v = 0);
/// vertices with m_v > 0 are always connected-type and may be absent.
/// `twists` is keyed by unblown edges and only matters when both endpoint
/// fibers are split; absent means 0.
struct MonodromyData {
  std::map<std::size_t, SheetType> sheets;
  std::map<std::size_t, bool> twists;

  friend bool operator==(const MonodromyData&, const MonodromyData&) = default;
};

/// Dual graph of the cover C with its involution and projection to the base.
struct CoverGraph {
  DualGraph base;
  EdgeSubset blown;
  Multigraph cover;
  std::vector<std::size_t> vertex_involution;
  std::vector<std::size_t> edge_involution;
  std::vector<bool> swaps_branches;  // involution maps end u of e to end v of its image
  std::vector<std::size_t> vertex_projection;
  std::vector<std::size_t> edge_projection;
  std::vector<std::size_t> fixed_edges;
};

namespace detail {

inline void validate_monodromy(const DualGraph& g, const EdgeSubset& blown, const MonodromyData& mono,
                               const std::vector<std::size_t>& m) {
  for (const auto& [v, type] : mono.sheets) {
    if (v >= g.vertex_count()) throw Error(ErrorKind::SplitInvalid, "sheet choice for unknown vertex");
    if (m[v] > 0 && type == SheetType::split)
      throw Error(ErrorKind::SplitInvalid, "vertex '" + g.vertex(v).id + "' is branched and cannot split");
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (m[v] > 0) continue;
    auto it = mono.sheets.find(v);
    if (it == mono.sheets.end())
      throw Error(ErrorKind::SplitInvalid, "no sheet choice for unbranched vertex '" + g.vertex(v).id + "'");
    if (it->second == SheetType::connected && g.vertex(v).genus == 0)
      throw Error(ErrorKind::SplitInvalid,
                  "rational vertex '" + g.vertex(v).id + "' has no connected unramified double cover");
  }
  for (const auto& [e, twist] : mono.twists) {
    if (e >= g.edge_count()) throw Error(ErrorKind::SplitInvalid, "twist for unknown edge");
    if (blown.contains(e) && twist)
      throw Error(ErrorKind::SplitInvalid, "twist given for blown edge '" + g.edge(e).id + "'");
  }
}

inline bool is_split(const MonodromyData& mono, std::size_t v) {
  auto it = mono.sheets.find(v);
  return it != mono.sheets.end() && it->second == SheetType::split;
}

inline bool twist_of(const MonodromyData& mono, std::size_t e) {
  auto it = mono.twists.find(e);
  return it != mono.twists.end() && it->second;
}

/// Builds the cover without the connectivity requirement.
inline CoverGraph assemble_cover(const DualGraph& g, const EdgeSubset& blown, const MonodromyData& mono) {
  const auto m = valency_profile(g, blown);
  CoverGraph cg{g, blown, {}, {}, {}, {}, {}, {}, {}};

  // sheet[v][s]: cover vertex on sheet s over v (both equal when connected-type).
  std::vector<std::array<std::size_t, 2>> sheet(g.vertex_count());
  std::vector<Vertex> vs;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto& base_v = g.vertex(v);
    if (is_split(mono, v)) {
      sheet[v] = {vs.size(), vs.size() + 1};
      vs.push_back({base_v.id + ".0", base_v.genus});
      vs.push_back({base_v.id + ".1", base_v.genus});
      cg.vertex_involution.push_back(sheet[v][1]);
      cg.vertex_involution.push_back(sheet[v][0]);
      cg.vertex_projection.push_back(v);
      cg.vertex_projection.push_back(v);
    } else {
      // Riemann-Hurwitz for a double cover branched at m_v points.
      sheet[v] = {vs.size(), vs.size()};
      vs.push_back({base_v.id, 2 * base_v.genus - 1 + m[v] / 2});
      cg.vertex_involution.push_back(sheet[v][0]);
      cg.vertex_projection.push_back(v);
    }
  }

  std::vector<Edge> es;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (blown.contains(i)) {
      cg.fixed_edges.push_back(es.size());
      cg.edge_involution.push_back(es.size());
      cg.swaps_branches.push_back(false);
      cg.edge_projection.push_back(i);
      es.push_back({e.id, sheet[e.u][0], sheet[e.v][0]});
      continue;
    }
    const std::size_t tw = (is_split(mono, e.u) && is_split(mono, e.v) && twist_of(mono, i)) ? 1 : 0;
    const std::size_t first = es.size();
    es.push_back({e.id + ".0", sheet[e.u][0], sheet[e.v][tw]});
    es.push_back({e.id + ".1", sheet[e.u][1], sheet[e.v][1 - tw]});
    cg.edge_involution.push_back(first + 1);
    cg.edge_involution.push_back(first);
    cg.swaps_branches.push_back(false);
    cg.swaps_branches.push_back(false);
    cg.edge_projection.push_back(i);
    cg.edge_projection.push_back(i);
  }
  cg.cover = Multigraph(std::move(vs), std::move(es));
  return cg;
}

}  // namespace detail

inline CoverGraph build_cover(const DualGraph& g, const EdgeSubset& blown, const MonodromyData& mono) {
  require_subset_of(g, blown);
  if (!is_eulerian(g, blown)) throw Error(ErrorKind::NotEulerian, "blown-up node set is not eulerian");
  detail::validate_monodromy(g, blown, mono, valency_profile(g, blown));
  CoverGraph cg = detail::assemble_cover(g, blown, mono);
  if (!cg.cover.is_connected())
    throw Error(ErrorKind::Disconnected, "monodromy gives a disconnected cover (trivial eta)");
  return cg;
}

struct AdmissibilityReport {
  bool ok = true;
  std::vector<std::string> diagnostics;

  void fail(std::string msg) {
    ok = false;
    diagnostics.push_back(std::move(msg));
  }
  explicit operator bool() const { return ok; }
};

/// Checks the involution, the fixed-point conditions, stability, the
/// quotient back to the base, and the genus 2g - 1.
inline AdmissibilityReport verify_admissible(const CoverGraph& cg) {
  AdmissibilityReport rep;
  const Multigraph& c = cg.cover;
  const DualGraph& g = cg.base;
  const std::size_t nv = c.vertex_count();
  const std::size_t ne = c.edge_count();

  if (cg.vertex_involution.size() != nv || cg.vertex_projection.size() != nv || cg.edge_involution.size() != ne ||
      cg.edge_projection.size() != ne || cg.swaps_branches.size() != ne || cg.blown.universe() != g.edge_count()) {
    rep.fail("cover maps have inconsistent sizes");
    return rep;
  }
  for (std::size_t v = 0; v < nv; ++v) {
    if (cg.vertex_involution[v] >= nv || cg.vertex_projection[v] >= g.vertex_count()) {
      rep.fail("vertex map out of range");
      return rep;
    }
  }
  for (std::size_t e = 0; e < ne; ++e) {
    if (cg.edge_involution[e] >= ne || cg.edge_projection[e] >= g.edge_count()) {
      rep.fail("edge map out of range");
      return rep;
    }
  }

  // Involution laws.
  for (std::size_t v = 0; v < nv; ++v) {
    const auto w = cg.vertex_involution[v];
    if (cg.vertex_involution[w] != v) rep.fail("vertex involution is not of order <= 2 at '" + c.vertex(v).id + "'");
    if (cg.vertex_projection[w] != cg.vertex_projection[v]) rep.fail("projection does not commute at '" + c.vertex(v).id + "'");
    if (c.vertex(w).genus != c.vertex(v).genus) rep.fail("involution changes genus at '" + c.vertex(v).id + "'");
  }
  for (std::size_t e = 0; e < ne; ++e) {
    const auto f = cg.edge_involution[e];
    const Edge& ce = c.edge(e);
    const Edge& cf = c.edge(f);
    if (cg.edge_involution[f] != e) rep.fail("edge involution is not of order <= 2 at '" + ce.id + "'");
    if (cg.edge_projection[f] != cg.edge_projection[e]) rep.fail("projection does not commute at '" + ce.id + "'");
    const auto iu = cg.vertex_involution[ce.u];
    const auto iv = cg.vertex_involution[ce.v];
    const bool ends_ok = cg.swaps_branches[e] ? (iu == cf.v && iv == cf.u) : (iu == cf.u && iv == cf.v);
    if (!ends_ok) rep.fail("involution is not a graph automorphism at edge '" + ce.id + "'");
  }

  // Fixed locus: exactly the edges over Sigma, branches not exchanged.
  std::vector<std::size_t> fixed;
  for (std::size_t e = 0; e < ne; ++e)
    if (cg.edge_involution[e] == e) fixed.push_back(e);
  if (fixed != cg.fixed_edges) rep.fail("recorded fixed edges differ from the involution's fixed edges");
  EdgeSubset over_fixed(g.edge_count());
  for (auto e : fixed) {
    if (cg.swaps_branches[e]) rep.fail("involution exchanges the branches of fixed node '" + c.edge(e).id + "'");
    if (over_fixed.contains(cg.edge_projection[e])) rep.fail("two fixed nodes over one base node");
    over_fixed.insert(cg.edge_projection[e]);
  }
  if (!(over_fixed == cg.blown)) rep.fail("fixed nodes do not lie exactly over the blown-up nodes");

  // Every fixed point of the involution is a node: on an invariant
  // component the Riemann-Hurwitz ramification count must equal the number
  // of fixed-node branches at it.
  std::vector<std::int64_t> fixed_branches(nv, 0);
  for (auto e : fixed) {
    ++fixed_branches[c.edge(e).u];
    ++fixed_branches[c.edge(e).v];
  }
  for (std::size_t v = 0; v < nv; ++v) {
    const auto base_genus = static_cast<std::int64_t>(g.vertex(cg.vertex_projection[v]).genus);
    const auto cover_genus = static_cast<std::int64_t>(c.vertex(v).genus);
    if (cg.vertex_involution[v] == v) {
      const std::int64_t ramification = 2 * cover_genus - 2 - 2 * (2 * base_genus - 2);
      if (ramification != fixed_branches[v])
        rep.fail("component '" + c.vertex(v).id + "' has involution fixed points off the nodes");
    } else if (cover_genus != base_genus || fixed_branches[v] != 0) {
      rep.fail("swapped component '" + c.vertex(v).id + "' is not an isomorphic sheet");
    }
  }

  // Quotient: orbits are in bijection with base vertices and edges, with
  // matching endpoints.
  std::vector<std::size_t> vertex_fiber(g.vertex_count(), 0), edge_fiber(g.edge_count(), 0);
  for (std::size_t v = 0; v < nv; ++v) ++vertex_fiber[cg.vertex_projection[v]];
  for (std::size_t e = 0; e < ne; ++e) ++edge_fiber[cg.edge_projection[e]];
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (vertex_fiber[v] == 0 || vertex_fiber[v] > 2) rep.fail("base vertex '" + g.vertex(v).id + "' has a bad fiber");
  }
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const std::size_t want = cg.blown.contains(i) ? 1 : 2;
    if (edge_fiber[i] != want) rep.fail("base edge '" + g.edge(i).id + "' has a bad fiber");
  }
  for (std::size_t e = 0; e < ne; ++e) {
    const Edge& be = g.edge(cg.edge_projection[e]);
    const auto pu = cg.vertex_projection[c.edge(e).u];
    const auto pv = cg.vertex_projection[c.edge(e).v];
    if (!((pu == be.u && pv == be.v) || (pu == be.v && pv == be.u)))
      rep.fail("edge '" + c.edge(e).id + "' does not project onto its base edge");
  }

  // Stable, connected, genus 2g - 1.
  if (!c.is_connected()) {
    rep.fail("cover is disconnected");
  } else {
    if (!is_stable(c)) rep.fail("cover is not stable");
    if (total_genus(c) != 2 * g.genus() - 1)
      rep.fail("cover genus " + std::to_string(total_genus(c)) + " != 2g - 1 = " + std::to_string(2 * g.genus() - 1));
  }
  return rep;
}

inline constexpr unsigned kDefaultMonodromyBits = 20;

/// Free binary choices over (G, Sigma): a sheet type per unbranched vertex of
/// positive genus, and a twist per unblown edge whose endpoints are both
/// unbranched.
inline std::size_t monodromy_free_bits(const DualGraph& g, const EdgeSubset& blown) {
  const auto m = valency_profile(g, blown);
  std::size_t bits = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) bits += m[v] == 0 && g.vertex(v).genus > 0;
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    bits += !blown.contains(i) && m[g.edge(i).u] == 0 && m[g.edge(i).v] == 0;
  return bits;
}

/// Visits valid monodromy data (connected cover) in a fixed order; stops
/// after `limit` candidates have been examined.
template <class Visitor>
void for_each_monodromy(const DualGraph& g, const EdgeSubset& blown, Visitor&& visit,
                        unsigned max_bits = kDefaultMonodromyBits,
                        std::uint64_t limit = std::numeric_limits<std::uint64_t>::max()) {
  require_subset_of(g, blown);
  if (!is_eulerian(g, blown)) throw Error(ErrorKind::NotEulerian, "blown-up node set is not eulerian");
  const auto bits = monodromy_free_bits(g, blown);
  if (bits > max_bits)
    throw Error(ErrorKind::CapExceeded,
                std::to_string(bits) + " free monodromy bits exceed the cap of " + std::to_string(max_bits));

  const auto m = valency_profile(g, blown);
  std::vector<std::size_t> choosable;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (m[v] == 0 && g.vertex(v).genus > 0) choosable.push_back(v);

  std::uint64_t examined = 0;
  for (std::uint64_t cm = 0; cm < (std::uint64_t{1} << choosable.size()); ++cm) {
    MonodromyData base;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      if (m[v] == 0) base.sheets[v] = g.vertex(v).genus == 0 ? SheetType::split : SheetType::connected;
    for (std::size_t k = 0; k < choosable.size(); ++k)
      if ((cm >> k) & 1u) base.sheets[choosable[k]] = SheetType::split;

    std::vector<std::size_t> twistable;
    for (std::size_t i = 0; i < g.edge_count(); ++i)
      if (!blown.contains(i) && detail::is_split(base, g.edge(i).u) && detail::is_split(base, g.edge(i).v))
        twistable.push_back(i);

    for (std::uint64_t tm = 0; tm < (std::uint64_t{1} << twistable.size()); ++tm) {
      if (examined++ >= limit) return;
      MonodromyData mono = base;
      for (std::size_t k = 0; k < twistable.size(); ++k)
        if ((tm >> k) & 1u) mono.twists[twistable[k]] = true;
      if (detail::assemble_cover(g, blown, mono).cover.is_connected()) visit(static_cast<const MonodromyData&>(mono));
    }
  }
}

inline std::vector<MonodromyData> enumerate_monodromies(const DualGraph& g, const EdgeSubset& blown,
                                                        unsigned max_bits = kDefaultMonodromyBits) {
  std::vector<MonodromyData> out;
  for_each_monodromy(g, blown, [&](const MonodromyData& d) { out.push_back(d); }, max_bits);
  return out;
}

}  // namespace prym
