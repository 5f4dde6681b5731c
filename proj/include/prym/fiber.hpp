#pragma once

#include <prym/canonical.hpp>
#include <prym/cycle_space.hpp>
#include <prym/graph.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <array>
#include <string>
#include <vector>

namespace prym {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow2(std::uint64_t e) {
  BigInt r = 1;
  r <<= static_cast<unsigned>(e);
  return r;
}

/// A multiplicity set {2^k}, stored as its sorted distinct exponents k.
using ExponentSet = std::vector<std::uint64_t>;

inline bool contains_power(const ExponentSet& s, std::int64_t exponent) {
  return exponent >= 0 && std::binary_search(s.begin(), s.end(), static_cast<std::uint64_t>(exponent));
}

struct FiberComponentRecord {
  EdgeSubset blown;   // Sigma: nodes carrying an exceptional component
  EdgeSubset delta;   // complement of Sigma
  std::uint64_t delta_betti = 0;
  BigInt eta_count;
  BigInt multiplicity;
  std::uint64_t multiplicity_exponent = 0;
};

struct FiberReport {
  std::uint64_t genus = 0;
  std::uint64_t genus_sum = 0;  // g^nu
  std::uint64_t betti = 0;
  std::vector<FiberComponentRecord> records;
  BigInt component_count;
  BigInt length;
  ExponentSet prym_exponents;
  ExponentSet spin_exponents;
  bool automorphism_caveat = false;  // counts are modulo inessential isomorphism only
};

namespace detail {
inline ExponentSet normalize(ExponentSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}
}  // namespace detail

/// Multiplicity exponents b1(G) - b1(Delta) for Delta ranging over the
/// cycle space itself (the spin-curve description).
inline ExponentSet spin_multiplicity_set(const DualGraph& g, unsigned cap = kDefaultEnumerationCap) {
  const std::size_t b = betti1(g);
  ExponentSet out;
  for_each_eulerian(g, [&](const EdgeSubset& delta) { out.push_back(b - subgraph_betti1(g, delta)); }, cap);
  return detail::normalize(std::move(out));
}

/// One record per eulerian Sigma: the quasistable model blown up at Sigma
/// supports 2^(2 g^nu + b1(Delta)) Prym structures, each of multiplicity
/// 2^(b1(G) - b1(Delta)).
inline FiberReport prym_fiber(const DualGraph& g, unsigned cap = kDefaultEnumerationCap) {
  FiberReport rep;
  rep.betti = betti1(g);
  rep.genus_sum = g.genus_sum();
  rep.genus = rep.genus_sum + rep.betti;

  for_each_eulerian(
      g,
      [&](const EdgeSubset& sigma) {
        FiberComponentRecord r;
        r.blown = sigma;
        r.delta = sigma.complement();
        r.delta_betti = subgraph_betti1(g, r.delta);
        r.multiplicity_exponent = rep.betti - r.delta_betti;
        r.eta_count = pow2(2 * rep.genus_sum + r.delta_betti);
        r.multiplicity = pow2(r.multiplicity_exponent);
        rep.records.push_back(std::move(r));
      },
      cap);

  std::sort(rep.records.begin(), rep.records.end(),
            [](const FiberComponentRecord& a, const FiberComponentRecord& b) { return a.blown < b.blown; });

  ExponentSet exps;
  for (const auto& r : rep.records) {
    rep.component_count += r.eta_count;
    rep.length += r.eta_count * r.multiplicity;
    exps.push_back(r.multiplicity_exponent);
  }
  rep.prym_exponents = detail::normalize(std::move(exps));
  rep.spin_exponents = spin_multiplicity_set(g, cap);
  rep.automorphism_caveat = has_nontrivial_automorphism(g);
  return rep;
}

inline bool is_eulerian_graph(const Multigraph& g) { return is_eulerian(g, EdgeSubset::full(g.edge_count())); }

inline bool all_components_rational(const Multigraph& g) {
  return std::all_of(g.vertices().begin(), g.vertices().end(), [](const Vertex& v) { return v.genus == 0; });
}

struct PropertyCheck {
  std::string name;
  bool passed = false;
  std::string witness;
};

struct CombpropReport {
  std::array<PropertyCheck, 5> properties;

  bool all_passed() const {
    return std::all_of(properties.begin(), properties.end(), [](const PropertyCheck& p) { return p.passed; });
  }
};

/// Evaluates the five combinatorial properties of the Prym multiplicity set
/// against a computed report. Any failure is an implementation bug.
inline CombpropReport check_combprop(const DualGraph& g, const FiberReport& rep) {
  CombpropReport out;
  const auto& L = rep.prym_exponents;
  const auto maxL = L.empty() ? 0 : L.back();

  out.properties[0] = {"one_in_L", contains_power(L, 0),
                       "multiplicity 1 carried by Sigma = {} with " + rep.records.front().eta_count.str() + " eta"};

  out.properties[1] = {"max_L_is_2^b1", !L.empty() && maxL == rep.betti,
                       "max exponent " + std::to_string(maxL) + ", b1 = " + std::to_string(rep.betti)};

  const bool rational = all_components_rational(g);
  const bool has_2g = contains_power(L, static_cast<std::int64_t>(rep.genus));
  out.properties[2] = {"2^g_in_L_iff_rational", has_2g == rational,
                       std::string("2^g ") + (has_2g ? "in" : "not in") + " L; components " +
                           (rational ? "all rational" : "not all rational")};

  const bool reduced = L.size() == 1 && L.front() == 0;
  const bool compact = rep.betti == 0;
  out.properties[3] = {"reduced_iff_compact_type", reduced == compact,
                       std::string(reduced ? "reduced" : "non-reduced") + ", " +
                           (compact ? "compact type" : "not compact type")};

  const bool eulerian = is_eulerian_graph(g);
  const bool equal = L == rep.spin_exponents;
  out.properties[4] = {"eulerian_implies_L_prym_eq_L_spin", !eulerian || equal,
                       std::string(eulerian ? "eulerian" : "not eulerian (vacuous)") + ", L_prym " +
                           (equal ? "==" : "!=") + " L_spin"};
  return out;
}

inline CombpropReport check_combprop(const DualGraph& g, unsigned cap = kDefaultEnumerationCap) {
  return check_combprop(g, prym_fiber(g, cap));
}

/// For each record: multiplicity > 1 exactly when X is not stable (Sigma nonempty).
inline std::vector<bool> check_reducedness_bullet(const FiberReport& rep) {
  std::vector<bool> flags;
  flags.reserve(rep.records.size());
  for (const auto& r : rep.records) flags.push_back((r.multiplicity > 1) == !r.blown.empty());
  return flags;
}

struct CorollaryReport {
  bool premise_i = false;      // 2^(b1-2) not in L
  bool conclusion_i = false;   // two smooth components
  bool premise_ii = false;     // 2^(b1-3) not in L
  bool conclusion_ii = false;  // irreducible with two nodes, or triangle of double edges

  bool holds() const { return (!premise_i || conclusion_i) && (!premise_ii || conclusion_ii); }
};

/// Corollary hypothesis: every vertex valency even and at least 4.
inline bool meets_corollary_hypothesis(const Multigraph& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto val = g.valency(v);
    if (val % 2 != 0 || val < 4) return false;
  }
  return true;
}

inline bool is_two_smooth_components(const Multigraph& g) {
  return g.vertex_count() == 2 &&
         std::none_of(g.edges().begin(), g.edges().end(), [](const Edge& e) { return e.is_loop(); });
}

inline bool is_irreducible_two_nodes(const Multigraph& g) {
  return g.vertex_count() == 1 && g.edge_count() == 2;
}

inline bool is_double_edge_triangle(const Multigraph& g) {
  if (g.vertex_count() != 3 || g.edge_count() != 6) return false;
  std::size_t m[3][3] = {};
  for (const auto& e : g.edges()) {
    if (e.is_loop()) return false;
    ++m[std::min(e.u, e.v)][std::max(e.u, e.v)];
  }
  return m[0][1] == 2 && m[0][2] == 2 && m[1][2] == 2;
}

inline CorollaryReport check_corollary_cor(const DualGraph& g, const FiberReport& rep) {
  if (!meets_corollary_hypothesis(g))
    throw Error(ErrorKind::HypothesisNotMet, "some vertex has odd valency or valency below 4");
  const auto b = static_cast<std::int64_t>(rep.betti);
  CorollaryReport out;
  out.premise_i = !contains_power(rep.prym_exponents, b - 2);
  out.conclusion_i = is_two_smooth_components(g);
  out.premise_ii = !contains_power(rep.prym_exponents, b - 3);
  out.conclusion_ii = is_irreducible_two_nodes(g) || is_double_edge_triangle(g);
  return out;
}

inline CorollaryReport check_corollary_cor(const DualGraph& g, unsigned cap = kDefaultEnumerationCap) {
  if (!meets_corollary_hypothesis(g))
    throw Error(ErrorKind::HypothesisNotMet, "some vertex has odd valency or valency below 4");
  return check_corollary_cor(g, prym_fiber(g, cap));
}

}  // namespace prym
