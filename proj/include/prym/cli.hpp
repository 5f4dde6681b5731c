#pragma once

#include <prym/cover.hpp>
#include <prym/dot.hpp>
#include <prym/fiber.hpp>
#include <prym/io.hpp>
#include <prym/picard.hpp>
#include <prym/search.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace prym::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitInput = 2;

inline int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse:
    case ErrorKind::Io:
    case ErrorKind::InvalidGraph: return kExitInput;
    default: return kExitDomain;
  }
}

struct Options {
  std::string input;
  std::string inline_json;
  std::string out_path;
  std::string format = "json";
  unsigned cap = kDefaultEnumerationCap;
  std::int64_t t = kMinTwist;
  // search
  std::size_t max_vertices = 3;
  std::size_t max_edges = 6;
  std::uint64_t max_genus = 1;
  std::uint64_t max_total_genus = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::string> filters;
  std::string mode = "graphs";
};

namespace detail {

inline io::Json load_document(const Options& o, std::istream& in) {
  std::string text;
  if (!o.inline_json.empty()) {
    text = o.inline_json;
  } else if (o.input.empty() || o.input == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream f(o.input);
    if (!f) throw Error(ErrorKind::Io, "cannot open '" + o.input + "'");
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  try {
    return io::Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

inline std::string dump(const io::Json& j) { return j.dump(2) + "\n"; }

inline std::string fiber_cmd(const io::Json& doc, const Options& o) {
  const auto g = io::parse_dual_graph(doc);
  return dump(io::to_json(g, prym_fiber(g, o.cap)));
}

inline std::string spin_cmd(const io::Json& doc, const Options& o) {
  const auto g = io::parse_dual_graph(doc);
  return dump(io::spin_to_json(g, spin_multiplicity_set(g, o.cap)));
}

inline std::string degrees_cmd(const io::Json& doc, const Options& o) {
  const auto g = io::parse_dual_graph(doc);
  const auto sigma = io::parse_sigma(g, doc);
  if (o.format == "dot") return dot::to_dot(g, sigma);
  const auto md = prym_multidegree(QuasistableModel(g, sigma), o.t);
  return dump(io::to_json(md, basic_inequality_check(md)));
}

inline std::string cover_cmd(const io::Json& doc, const Options& o) {
  const auto g = io::parse_dual_graph(doc);
  const auto sigma = io::parse_sigma(g, doc);
  const auto mono = io::parse_monodromy(g, sigma, doc);
  const auto cg = build_cover(g, sigma, mono);
  if (o.format == "dot") return dot::to_dot(cg);
  const auto adm = verify_admissible(cg);

  io::Json j = io::to_json(cg);
  j["sigma"] = io::detail::strings(sigma.ids(g));
  j["monodromy"] = io::to_json(mono, g);
  j["admissible"] = adm.ok;
  j["diagnostics"] = io::detail::strings(adm.diagnostics);
  // Both counts side by side; no relation between them is asserted.
  io::Json census = {{"eta_count", pow2(2 * g.genus_sum() + subgraph_betti1(g, sigma.complement())).str()}};
  if (monodromy_free_bits(g, sigma) <= kDefaultMonodromyBits) {
    std::uint64_t n = 0;
    for_each_monodromy(g, sigma, [&](const MonodromyData&) { ++n; });
    census["valid_monodromies"] = n;
  } else {
    census["valid_monodromies"] = nullptr;
  }
  j["census"] = census;
  return dump(j);
}

inline std::string check_cmd(const io::Json& doc, const Options& o, bool& all_ok) {
  const auto g = io::parse_dual_graph(doc);
  const auto rep = prym_fiber(g, o.cap);
  const auto comb = check_combprop(g, rep);
  const auto bullet = check_reducedness_bullet(rep);
  const bool bullet_ok = std::all_of(bullet.begin(), bullet.end(), [](bool b) { return b; });

  io::Json j;
  j["combprop"] = io::to_json(comb);
  j["reduced"] = rep.prym_exponents == ExponentSet{0};
  j["reducedness_bullet"] = {{"records", bullet.size()}, {"all_hold", bullet_ok}};
  all_ok = comb.all_passed() && bullet_ok;
  if (meets_corollary_hypothesis(g)) {
    const auto cor = check_corollary_cor(g, rep);
    j["corollary"] = io::to_json(cor);
    all_ok = all_ok && cor.holds();
  } else {
    j["corollary"] = "hypothesis_not_met";
  }
  return dump(j);
}

inline std::string export_dot_cmd(const io::Json& doc) {
  const auto g = io::parse_dual_graph(doc);
  return dot::to_dot(g, io::parse_sigma(g, doc));
}

inline std::string search_cmd(const Options& o) {
  SearchSpace s;
  s.max_vertices = o.max_vertices;
  s.max_edges = o.max_edges;
  s.max_genus_per_vertex = o.max_genus;
  s.max_total_genus = o.max_total_genus;
  for (const auto& f : o.filters) {
    auto parsed = parse_filter(f);
    if (!parsed) throw Error(ErrorKind::Parse, "unknown filter '" + f + "'");
    s.filters.push_back(*parsed);
  }
  std::ostringstream os;
  if (o.mode == "graphs") {
    for_each_graph(s, [&](const DualGraph& g) {
      io::Json j = {{"graph", io::to_json(g)}, {"g", g.genus()}, {"b1", betti1(g)}};
      os << j.dump() << "\n";
    });
  } else if (o.mode == "collisions") {
    for (const auto& p : find_L_collision(s, o.cap)) {
      io::Json j = {{"first", io::to_json(p.first)},
                    {"second", io::to_json(p.second)},
                    {"L_prym", io::detail::powers(p.prym)},
                    {"L_spin_first", io::detail::powers(p.first_spin)},
                    {"L_spin_second", io::detail::powers(p.second_spin)}};
      os << j.dump() << "\n";
    }
  } else if (o.mode == "corollary") {
    const auto sweep = verify_corollary_over_space(s, o.cap);
    for (const auto& g : sweep.counterexamples) os << io::Json{{"counterexample", io::to_json(g)}}.dump() << "\n";
    io::Json summary = {{"graphs_checked", sweep.graphs_checked},
                        {"premise_i", sweep.premise_i},
                        {"premise_ii", sweep.premise_ii},
                        {"counterexamples", sweep.counterexamples.size()}};
    os << summary.dump() << "\n";
  } else {
    throw Error(ErrorKind::Parse, "unknown search mode '" + o.mode + "'");
  }
  return os.str();
}

}  // namespace detail

/// Runs one subcommand. Exit status: 0 success, 1 domain error (or a
/// failed `check`), 2 input/usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in = std::cin) {
  CLI::App app{"Combinatorics of Prym and spin fibers over stable curves", "prymctl"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_input = [&](CLI::App* sc) {
    sc->add_option("input", o.input, "graph JSON file, or - for stdin");
    sc->add_option("--json", o.inline_json, "inline graph JSON");
    sc->add_option("--out", o.out_path, "write output to this path");
    sc->add_option("--cap", o.cap, "maximum b1 for exhaustive enumeration")->capture_default_str();
  };
  auto* fiber = app.add_subcommand("fiber", "Prym fiber report");
  add_input(fiber);
  auto* spin = app.add_subcommand("spin", "spin multiplicity set");
  add_input(spin);
  auto* degrees = app.add_subcommand("degrees", "multidegree and Basic Inequality certificates");
  add_input(degrees);
  degrees->add_option("--t", o.t, "power of the dualizing sheaf (>= 10)")->capture_default_str();
  degrees->add_option("--format", o.format)->check(CLI::IsMember({"json", "dot"}));
  auto* cover = app.add_subcommand("cover", "admissible double cover from sigma and monodromy");
  add_input(cover);
  cover->add_option("--format", o.format)->check(CLI::IsMember({"json", "dot"}));
  auto* check = app.add_subcommand("check", "verify the combinatorial properties on one graph");
  add_input(check);
  auto* export_dot = app.add_subcommand("export-dot", "DOT rendering of a graph (sigma dashed)");
  add_input(export_dot);
  auto* search = app.add_subcommand("search", "exhaustive search over small stable graphs");
  search->add_option("--out", o.out_path);
  search->add_option("--cap", o.cap)->capture_default_str();
  search->add_option("--max-vertices", o.max_vertices)->capture_default_str();
  search->add_option("--max-edges", o.max_edges)->capture_default_str();
  search->add_option("--max-genus", o.max_genus, "maximum genus per vertex")->capture_default_str();
  search->add_option("--max-total-genus", o.max_total_genus);
  search->add_option("--filter", o.filters, "eulerian | valency4 | tree | loopless");
  search->add_option("--mode", o.mode)->check(CLI::IsMember({"graphs", "collisions", "corollary"}))->capture_default_str();

  std::vector<const char*> argv{"prymctl"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitInput;
  }

  try {
    std::string result;
    int status = kExitOk;
    if (*search) {
      result = detail::search_cmd(o);
    } else {
      const auto doc = detail::load_document(o, in);
      if (*fiber) result = detail::fiber_cmd(doc, o);
      else if (*spin) result = detail::spin_cmd(doc, o);
      else if (*degrees) result = detail::degrees_cmd(doc, o);
      else if (*cover) result = detail::cover_cmd(doc, o);
      else if (*export_dot) result = detail::export_dot_cmd(doc);
      else if (*check) {
        bool ok = true;
        result = detail::check_cmd(doc, o, ok);
        if (!ok) status = kExitDomain;
      }
    }
    if (o.out_path.empty()) {
      out << result;
    } else {
      std::ofstream f(o.out_path, std::ios::binary);
      if (!f) throw Error(ErrorKind::Io, "cannot write '" + o.out_path + "'");
      f << result;
    }
    return status;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const nlohmann::json::exception& e) {
    err << "Parse: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace prym::cli
