#pragma once

#include <prym/graph.hpp>

#include <algorithm>
#include <compare>
#include <numeric>
#include <string>
#include <vector>

namespace prym {

inline constexpr std::size_t kCanonicalMaxVertices = 8;

/// Isomorphism invariant of a genus-weighted multigraph: equal signatures
/// iff isomorphic. Edge ids and vertex ids do not enter.
struct CanonicalForm {
  std::string signature;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

namespace detail {

inline std::vector<std::vector<std::size_t>> multiplicity_matrix(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> m(n, std::vector<std::size_t>(n, 0));
  for (const auto& e : g.edges()) {
    ++m[e.u][e.v];
    if (!e.is_loop()) ++m[e.v][e.u];
  }
  return m;
}

inline void append_u64(std::string& out, std::uint64_t x) {
  for (int shift = 56; shift >= 0; shift -= 8) out.push_back(static_cast<char>((x >> shift) & 0xff));
}

inline void append_u32(std::string& out, std::size_t x) {
  if (x > 0xffffffffu) throw Error(ErrorKind::CapExceeded, "edge multiplicity too large for canonical form");
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<char>((x >> shift) & 0xff));
}

}  // namespace detail

/// Lexicographically least (genus vector, upper-triangular multiplicity
/// matrix) over all vertex orderings. Factorial in |V|; limited to 8.
inline CanonicalForm canonical_form(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kCanonicalMaxVertices)
    throw Error(ErrorKind::CapExceeded, "canonical form is limited to " + std::to_string(kCanonicalMaxVertices) +
                                            " vertices");
  const auto mult = detail::multiplicity_matrix(g);

  // Any minimizing ordering lists genera in nondecreasing order, so only
  // permutations within equal-genus blocks need to be tried.
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return g.vertex(a).genus < g.vertex(b).genus || (g.vertex(a).genus == g.vertex(b).genus && a < b);
  });

  std::string head;
  detail::append_u64(head, n);
  for (auto v : perm) detail::append_u64(head, g.vertex(v).genus);

  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && g.vertex(perm[j]).genus == g.vertex(perm[i]).genus) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }

  std::string best;
  bool have_best = false;
  std::string body;
  // Odometer over per-block permutations.
  while (true) {
    body.clear();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) detail::append_u32(body, mult[perm[i]][perm[j]]);
    if (!have_best || body < best) {
      best = body;
      have_best = true;
    }
    std::size_t b = 0;
    for (; b < blocks.size(); ++b) {
      auto first = perm.begin() + static_cast<std::ptrdiff_t>(blocks[b].first);
      auto last = perm.begin() + static_cast<std::ptrdiff_t>(blocks[b].second);
      if (std::next_permutation(first, last)) break;
    }
    if (b == blocks.size()) break;
  }
  return CanonicalForm{head + best};
}

inline bool are_isomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

/// True when the multigraph has an automorphism other than the identity:
/// a genus- and multiplicity-preserving vertex permutation, or a swap of
/// two parallel edges or two loops at one vertex.
inline bool has_nontrivial_automorphism(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  const auto mult = detail::multiplicity_matrix(g);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (mult[i][j] >= 2) return true;

  std::vector<std::size_t> valency(n);
  for (std::size_t v = 0; v < n; ++v) valency[v] = g.valency(v);
  auto compatible = [&](std::size_t v, std::size_t w) {
    return g.vertex(v).genus == g.vertex(w).genus && valency[v] == valency[w] && mult[v][v] == mult[w][w];
  };

  // Backtracking search for a non-identity vertex automorphism.
  std::vector<std::size_t> image(n);
  std::vector<bool> used(n, false);
  bool found = false;
  auto extend = [&](auto&& self, std::size_t v, bool moved) -> void {
    if (found) return;
    if (v == n) {
      found = moved;
      return;
    }
    for (std::size_t w = 0; w < n && !found; ++w) {
      if (used[w] || !compatible(v, w)) continue;
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u) ok = mult[u][v] == mult[image[u]][w];
      if (!ok) continue;
      used[w] = true;
      image[v] = w;
      self(self, v + 1, moved || w != v);
      used[w] = false;
    }
  };
  extend(extend, 0, false);
  return found;
}

}  // namespace prym
