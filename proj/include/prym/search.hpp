#pragma once

#include <prym/canonical.hpp>
#include <prym/fiber.hpp>
#include <prym/graph.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace prym {

enum class Filter { eulerian, even_valency_at_least_4, compact_type, loopless };

inline constexpr std::string_view filter_name(Filter f) {
  switch (f) {
    case Filter::eulerian: return "eulerian";
    case Filter::even_valency_at_least_4: return "valency4";
    case Filter::compact_type: return "tree";
    case Filter::loopless: return "loopless";
  }
  return "unknown";
}

inline std::optional<Filter> parse_filter(std::string_view s) {
  for (auto f : {Filter::eulerian, Filter::even_valency_at_least_4, Filter::compact_type, Filter::loopless})
    if (filter_name(f) == s) return f;
  return std::nullopt;
}

inline bool passes(const Multigraph& g, Filter f) {
  switch (f) {
    case Filter::eulerian: return is_eulerian_graph(g);
    case Filter::even_valency_at_least_4: return meets_corollary_hypothesis(g);
    case Filter::compact_type: return betti1(g) == 0;
    case Filter::loopless:
      return std::none_of(g.edges().begin(), g.edges().end(), [](const Edge& e) { return e.is_loop(); });
  }
  return false;
}

inline constexpr double kMaxSearchCandidates = 1e7;

struct SearchSpace {
  std::size_t min_vertices = 1;
  std::size_t max_vertices = 2;
  std::size_t max_edges = 2;
  std::uint64_t max_genus_per_vertex = 1;
  std::uint64_t min_total_genus = 2;
  std::uint64_t max_total_genus = std::numeric_limits<std::uint64_t>::max();
  std::vector<Filter> filters;
};

namespace detail {

inline double binomial(double n, double k) {
  double r = 1;
  for (double i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace detail

/// Number of (genus vector, edge multiset) candidates the generator visits.
inline double candidate_count(const SearchSpace& s) {
  double total = 0;
  for (std::size_t n = std::max<std::size_t>(s.min_vertices, 1); n <= s.max_vertices; ++n) {
    const double pairs = static_cast<double>(n * (n + 1) / 2);
    const double genus_vectors =
        detail::binomial(static_cast<double>(s.max_genus_per_vertex) + static_cast<double>(n), static_cast<double>(n));
    total += genus_vectors * detail::binomial(pairs + static_cast<double>(s.max_edges), static_cast<double>(s.max_edges));
  }
  return total;
}

/// Visits every connected stable genus-weighted multigraph within the bounds
/// exactly once up to isomorphism. Vertices are named v1.., edges e1.. in
/// lexicographic order of their endpoint pairs.
template <class Visitor>
void for_each_graph(const SearchSpace& s, Visitor&& visit) {
  if (s.max_vertices > kCanonicalMaxVertices || s.max_genus_per_vertex > 64 ||
      candidate_count(s) > kMaxSearchCandidates)
    throw Error(ErrorKind::SpaceTooLarge, "search space exceeds the exhaustive-enumeration budget");

  std::set<CanonicalForm> seen;
  for (std::size_t n = std::max<std::size_t>(s.min_vertices, 1); n <= s.max_vertices; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) pairs.emplace_back(i, j);

    std::vector<std::uint64_t> genera(n, 0);
    std::vector<std::size_t> mult(pairs.size(), 0);

    auto emit = [&]() {
      std::vector<Vertex> vs;
      for (std::size_t i = 0; i < n; ++i) vs.push_back({"v" + std::to_string(i + 1), genera[i]});
      std::vector<Edge> es;
      for (std::size_t p = 0; p < pairs.size(); ++p)
        for (std::size_t k = 0; k < mult[p]; ++k)
          es.push_back({"e" + std::to_string(es.size() + 1), pairs[p].first, pairs[p].second});
      Multigraph g(std::move(vs), std::move(es));
      if (!g.is_connected() || !is_stable(g)) return;
      const auto genus = total_genus(g);
      if (genus < s.min_total_genus || genus > s.max_total_genus) return;
      for (auto f : s.filters)
        if (!passes(g, f)) return;
      if (!seen.insert(canonical_form(g)).second) return;
      visit(static_cast<const DualGraph&>(DualGraph(std::move(g))));
    };

    auto edges_rec = [&](auto&& self, std::size_t p, std::size_t remaining) -> void {
      if (p == pairs.size()) {
        emit();
        return;
      }
      for (std::size_t k = 0; k <= remaining; ++k) {
        mult[p] = k;
        self(self, p + 1, remaining - k);
      }
      mult[p] = 0;
    };

    // Genus vectors are generated nondecreasing; vertex order is irrelevant
    // up to isomorphism.
    auto genus_rec = [&](auto&& self, std::size_t i, std::uint64_t lo) -> void {
      if (i == n) {
        edges_rec(edges_rec, 0, s.max_edges);
        return;
      }
      for (std::uint64_t x = lo; x <= s.max_genus_per_vertex; ++x) {
        genera[i] = x;
        self(self, i + 1, x);
      }
    };
    genus_rec(genus_rec, 0, 0);
  }
}

inline std::vector<DualGraph> enumerate_graphs(const SearchSpace& s) {
  std::vector<DualGraph> out;
  for_each_graph(s, [&](const DualGraph& g) { out.push_back(g); });
  return out;
}

struct LSets {
  ExponentSet prym;
  ExponentSet spin;
};

inline LSets multiplicity_sets(const DualGraph& g, unsigned cap = kDefaultEnumerationCap) {
  ExponentSet prym;
  const std::size_t b = betti1(g);
  for_each_eulerian(g, [&](const EdgeSubset& sigma) { prym.push_back(b - subgraph_betti1(g, sigma.complement())); }, cap);
  return {detail::normalize(std::move(prym)), spin_multiplicity_set(g, cap)};
}

struct CollisionPair {
  DualGraph first;
  DualGraph second;
  ExponentSet prym;
  ExponentSet first_spin;
  ExponentSet second_spin;
};

/// All pairs of non-isomorphic graphs in the space with equal Prym
/// multiplicity sets but different spin multiplicity sets.
inline std::vector<CollisionPair> find_L_collision(const SearchSpace& s, unsigned cap = kDefaultEnumerationCap) {
  std::map<ExponentSet, std::vector<std::pair<DualGraph, ExponentSet>>> by_prym;
  for_each_graph(s, [&](const DualGraph& g) {
    auto sets = multiplicity_sets(g, cap);
    by_prym[sets.prym].emplace_back(g, std::move(sets.spin));
  });
  std::vector<CollisionPair> out;
  for (const auto& [prym, group] : by_prym)
    for (std::size_t i = 0; i < group.size(); ++i)
      for (std::size_t j = i + 1; j < group.size(); ++j)
        if (group[i].second != group[j].second)
          out.push_back({group[i].first, group[j].first, prym, group[i].second, group[j].second});
  return out;
}

struct CorollarySweep {
  std::size_t graphs_checked = 0;
  std::size_t premise_i = 0;
  std::size_t premise_ii = 0;
  std::vector<DualGraph> counterexamples;
};

/// Runs the corollary check on every graph in the space that meets its
/// valency hypothesis.
inline CorollarySweep verify_corollary_over_space(SearchSpace s, unsigned cap = kDefaultEnumerationCap) {
  if (std::find(s.filters.begin(), s.filters.end(), Filter::even_valency_at_least_4) == s.filters.end())
    s.filters.push_back(Filter::even_valency_at_least_4);
  CorollarySweep out;
  for_each_graph(s, [&](const DualGraph& g) {
    const auto rep = check_corollary_cor(g, cap);
    ++out.graphs_checked;
    out.premise_i += rep.premise_i;
    out.premise_ii += rep.premise_ii;
    if (!rep.holds()) out.counterexamples.push_back(g);
  });
  return out;
}

}  // namespace prym
