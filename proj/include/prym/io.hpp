#pragma once

#include <prym/cover.hpp>
#include <prym/fiber.hpp>
#include <prym/graph.hpp>
#include <prym/picard.hpp>
#include <prym/search.hpp>

#include <json.hpp>

#include <string>
#include <unordered_map>
#include <vector>

namespace prym::io {

using Json = nlohmann::ordered_json;

namespace detail {

[[noreturn]] inline void schema(const std::string& what) { throw Error(ErrorKind::Parse, what); }

inline const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema(std::string("missing key '") + key + "'");
  return j.at(key);
}

inline std::string string_field(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_string()) schema(std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

inline Json strings(const std::vector<std::string>& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(s);
  return a;
}

inline Json powers(const ExponentSet& exps) {
  Json a = Json::array();
  for (auto e : exps) {
    if (e < 64) {
      a.push_back(std::uint64_t{1} << e);
    } else {
      a.push_back(pow2(e).str());
    }
  }
  return a;
}

}  // namespace detail

/// {"vertices":[{"id","genus"}...],"edges":[{"id","ends":[u,v]}...]}.
/// Edge order in the document fixes edge indices.
inline Multigraph parse_multigraph(const Json& j) {
  const Json& jv = detail::member(j, "vertices");
  const Json& je = detail::member(j, "edges");
  if (!jv.is_array() || !je.is_array()) detail::schema("'vertices' and 'edges' must be arrays");

  std::vector<Vertex> vs;
  std::unordered_map<std::string, std::size_t> index;
  for (const auto& x : jv) {
    Vertex v{detail::string_field(x, "id"), 0};
    const Json& gj = detail::member(x, "genus");
    if (!gj.is_number_integer() || gj.get<std::int64_t>() < 0) detail::schema("genus of '" + v.id + "' must be a nonnegative integer");
    v.genus = gj.get<std::uint64_t>();
    if (!index.emplace(v.id, vs.size()).second) throw Error(ErrorKind::InvalidGraph, "duplicate vertex id '" + v.id + "'");
    vs.push_back(std::move(v));
  }
  std::vector<Edge> es;
  for (const auto& x : je) {
    const std::string id = detail::string_field(x, "id");
    const Json& ends = detail::member(x, "ends");
    if (!ends.is_array() || ends.size() != 2 || !ends[0].is_string() || !ends[1].is_string())
      detail::schema("'ends' of edge '" + id + "' must be a pair of vertex ids");
    auto lookup = [&](const Json& s) {
      auto it = index.find(s.get<std::string>());
      if (it == index.end()) throw Error(ErrorKind::InvalidGraph, "edge '" + id + "' names unknown vertex '" + s.get<std::string>() + "'");
      return it->second;
    };
    es.push_back({id, lookup(ends[0]), lookup(ends[1])});
  }
  return Multigraph(std::move(vs), std::move(es));
}

/// Accepts the graph at the top level or under "graph".
inline DualGraph parse_dual_graph(const Json& doc) {
  const Json& j = doc.contains("graph") ? doc.at("graph") : doc;
  return DualGraph(parse_multigraph(j));
}

inline Json to_json(const Multigraph& g) {
  Json vs = Json::array();
  for (const auto& v : g.vertices()) vs.push_back({{"id", v.id}, {"genus", v.genus}});
  Json es = Json::array();
  for (const auto& e : g.edges()) es.push_back({{"id", e.id}, {"ends", {g.vertex(e.u).id, g.vertex(e.v).id}}});
  return {{"vertices", vs}, {"edges", es}};
}

/// Optional "sigma": [edge ids]; absent means the empty set.
inline EdgeSubset parse_sigma(const DualGraph& g, const Json& doc) {
  EdgeSubset s(g.edge_count());
  if (!doc.contains("sigma")) return s;
  const Json& js = doc.at("sigma");
  if (!js.is_array()) detail::schema("'sigma' must be an array of edge ids");
  for (const auto& x : js) {
    if (!x.is_string()) detail::schema("'sigma' entries must be edge ids");
    s.insert(g.edge_index(x.get<std::string>()));
  }
  return s;
}

/// "monodromy": {"sheets": {"v1": "split"|"connected"}, "twists": {"e1": 0|1}}.
/// Unbranched vertices without an entry default to split.
inline MonodromyData parse_monodromy(const DualGraph& g, const EdgeSubset& blown, const Json& doc) {
  MonodromyData mono;
  const auto m = valency_profile(g, blown);
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (m[v] == 0) mono.sheets[v] = SheetType::split;
  if (!doc.contains("monodromy")) return mono;
  const Json& jm = doc.at("monodromy");
  if (!jm.is_object()) detail::schema("'monodromy' must be an object");
  if (jm.contains("sheets")) {
    for (const auto& [id, val] : jm.at("sheets").items()) {
      if (!val.is_string()) detail::schema("sheet type of '" + id + "' must be a string");
      const auto s = val.get<std::string>();
      if (s != "split" && s != "connected") detail::schema("sheet type must be 'split' or 'connected'");
      mono.sheets[g.vertex_index(id)] = s == "split" ? SheetType::split : SheetType::connected;
    }
  }
  if (jm.contains("twists")) {
    for (const auto& [id, val] : jm.at("twists").items()) {
      if (!val.is_number_integer() || (val.get<int>() != 0 && val.get<int>() != 1))
        detail::schema("twist of '" + id + "' must be 0 or 1");
      mono.twists[g.edge_index(id)] = val.get<int>() == 1;
    }
  }
  return mono;
}

inline Json to_json(const MonodromyData& mono, const Multigraph& g) {
  Json sheets = Json::object();
  for (const auto& [v, t] : mono.sheets) sheets[g.vertex(v).id] = t == SheetType::split ? "split" : "connected";
  Json twists = Json::object();
  for (const auto& [e, t] : mono.twists) twists[g.edge(e).id] = t ? 1 : 0;
  return {{"sheets", sheets}, {"twists", twists}};
}

inline Json to_json(const DualGraph& g, const FiberReport& rep) {
  Json records = Json::array();
  for (const auto& r : rep.records)
    records.push_back({{"sigma", detail::strings(r.blown.ids(g))},
                       {"eta_count", r.eta_count.str()},
                       {"multiplicity", r.multiplicity.str()}});
  return {{"g", rep.genus},
          {"gnu", rep.genus_sum},
          {"b1", rep.betti},
          {"records", records},
          {"component_count", rep.component_count.str()},
          {"L_prym", detail::powers(rep.prym_exponents)},
          {"L_spin", detail::powers(rep.spin_exponents)},
          {"length", rep.length.str()},
          {"automorphism_caveat", rep.automorphism_caveat}};
}

inline Json spin_to_json(const DualGraph& g, const ExponentSet& spin) {
  return {{"g", g.genus()}, {"b1", betti1(g)}, {"L_spin", detail::powers(spin)}};
}

inline Json to_json(const CombpropReport& rep) {
  Json a = Json::array();
  for (const auto& p : rep.properties) a.push_back({{"property", p.name}, {"passed", p.passed}, {"witness", p.witness}});
  return a;
}

inline Json to_json(const CorollaryReport& rep) {
  return {{"premise_i", rep.premise_i},
          {"conclusion_i", rep.conclusion_i},
          {"premise_ii", rep.premise_ii},
          {"conclusion_ii", rep.conclusion_ii},
          {"holds", rep.holds()}};
}

inline Json to_json(const Multidegree& md, const std::vector<SubcurveCertificate>& certs) {
  const auto& model = md.model;
  Json degrees = Json::object();
  for (std::size_t c = 0; c < model.component_count(); ++c) degrees[model.component_id(c)] = md.degrees[c];
  Json jc = Json::array();
  bool all = true;
  for (const auto& c : certs) {
    Json ids = Json::array();
    for (auto k : c.components()) ids.push_back(model.component_id(k));
    jc.push_back({{"subcurve", ids},
                  {"d_Y", c.d_Y},
                  {"k_Y", c.k_Y},
                  {"g_Y", c.g_Y},
                  {"m_Y", to_string(c.m_Y)},
                  {"slack_low", to_string(c.slack_low)},
                  {"slack_high", to_string(c.slack_high)},
                  {"ktilde_Y", c.ktilde_Y},
                  {"holds", c.holds()}});
    all = all && c.holds();
  }
  return {{"t", md.t},
          {"sigma", detail::strings(model.blown().ids(model.base()))},
          {"total", md.total},
          {"degrees", degrees},
          {"basic_inequality", all},
          {"closed_orbit", closed_orbit_criterion(certs)},
          {"certificates", jc}};
}

inline Json to_json(const CoverGraph& cg) {
  const auto& c = cg.cover;
  Json inv_v = Json::object(), proj_v = Json::object();
  for (std::size_t v = 0; v < c.vertex_count(); ++v) {
    inv_v[c.vertex(v).id] = c.vertex(cg.vertex_involution[v]).id;
    proj_v[c.vertex(v).id] = cg.base.vertex(cg.vertex_projection[v]).id;
  }
  Json inv_e = Json::object(), proj_e = Json::object();
  for (std::size_t e = 0; e < c.edge_count(); ++e) {
    inv_e[c.edge(e).id] = c.edge(cg.edge_involution[e]).id;
    proj_e[c.edge(e).id] = cg.base.edge(cg.edge_projection[e]).id;
  }
  std::vector<std::string> fixed;
  for (auto e : cg.fixed_edges) fixed.push_back(c.edge(e).id);
  return {{"cover", to_json(c)},
          {"genus", total_genus(c)},
          {"involution", {{"vertices", inv_v}, {"edges", inv_e}}},
          {"projection", {{"vertices", proj_v}, {"edges", proj_e}}},
          {"fixed_edges", detail::strings(fixed)}};
}

}  // namespace prym::io
