// Command line front end: graphs and characters come in as JSON files,
// reports go out as JSON (default), DOT or a flat table.
//
// Exit codes: 0 success, 2 input error, 3 precondition violation,
// 4 internal invariant failure.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "artkernel/artkernel.hpp"

namespace {

using artkernel::Json;

int exit_code_for(artkernel::ErrorKind kind) {
  switch (kind) {
    case artkernel::ErrorKind::Input:
      return 2;
    case artkernel::ErrorKind::Precondition:
      return 3;
    case artkernel::ErrorKind::Internal:
      return 4;
  }
  return 4;
}

bool verbose() {
  const char* env = std::getenv("ARTKERNEL_VERBOSE");
  return env != nullptr && std::string(env) != "0";
}

void render_table(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      std::string path = prefix.empty() ? key : prefix + "." + key;
      if (value.is_object() || (value.is_array() && !value.empty() && value[0].is_structured()))
        render_table(value, path, out);
      else
        out << path << ": " << value.dump() << "\n";
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i)
      render_table(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << j.dump() << "\n";
  }
}

struct Output {
  std::string format = "json";

  void emit(const Json& report, const std::string& dot = "") const {
    if (format == "json") {
      std::cout << report.dump(2) << "\n";
    } else if (format == "table") {
      render_table(report, "", std::cout);
    } else if (format == "dot") {
      if (dot.empty())
        artkernel::throw_input("no_dot_output", "this subcommand has no DOT rendering");
      std::cout << dot;
    } else {
      artkernel::throw_input("bad_format", "unknown format '" + format + "'");
    }
  }
};

artkernel::VertexSet parse_vertex_list(const std::string& csv) {
  std::vector<std::string> parts;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) parts.push_back(item);
  return artkernel::make_vertex_set(parts);
}

int run_analyze(const std::string& graph_path, const Output& out) {
  auto g = artkernel::graph_from_json(artkernel::read_json_file(graph_path));
  Json j;
  j["vertices"] = g.vertices();
  j["vertex_count"] = g.vertex_count();
  j["edge_count"] = g.edge_count();
  bool connected = artkernel::is_connected(g);
  j["connected"] = connected;
  auto comps = artkernel::connected_components(g);
  Json jcomps = Json::array();
  for (const auto& c : comps) jcomps.push_back(c);
  j["components"] = jcomps;

  Json cuts = Json::array(), jblocks = Json::array(), seps = Json::array();
  Json bldeg = Json::object();
  bool block_graph = true;
  for (const auto& comp : comps) {
    auto sub = artkernel::full_subgraph(g, comp);
    for (const auto& v : artkernel::cut_vertices(sub)) cuts.push_back(v);
    for (const auto& b : artkernel::blocks(sub)) jblocks.push_back(b);
    for (const auto& v : sub.vertices()) bldeg[v] = artkernel::block_degree(sub, v);
    if (sub.vertex_count() >= 2)
      for (const auto& s : artkernel::minimal_vertex_separators(sub)) seps.push_back(s);
    block_graph = block_graph && artkernel::is_block_graph(sub);
  }
  j["cut_vertices"] = cuts;
  j["blocks"] = jblocks;
  j["block_degrees"] = bldeg;
  j["minimal_separators"] = seps;
  j["is_block_graph"] = block_graph;

  auto chordality = artkernel::is_chordal(g);
  Json jc;
  jc["is_chordal"] = chordality.chordal;
  if (chordality.chordal)
    jc["elimination_order"] = chordality.elimination_order;
  else
    jc["chordless_cycle"] = chordality.chordless_cycle;
  j["chordality"] = jc;

  auto soa = artkernel::splits_over_abelian(g);
  Json js;
  js["value"] = soa.value;
  js["reason"] = soa.reason;
  if (soa.reason == "separating_clique") js["clique"] = soa.clique;
  j["splits_over_abelian"] = js;

  out.emit(j, artkernel::graph_to_dot(g));
  return 0;
}

int run_classify(const std::string& graph_path, const std::string& char_path, const Output& out) {
  auto g = artkernel::graph_from_json(artkernel::read_json_file(graph_path));
  auto f = artkernel::character_from_json(artkernel::read_json_file(char_path), g);
  auto cls = artkernel::classify(f, g);
  Json j = artkernel::classification_to_json(cls);
  j["normalized_weights"] = artkernel::weights_to_json(f);
  out.emit(j);
  return 0;
}

int run_split(const std::string& graph_path, const std::string& char_path,
              const std::string& gamma1_csv, const std::string& gamma2_csv, const Output& out) {
  auto g = artkernel::graph_from_json(artkernel::read_json_file(graph_path));
  auto f = artkernel::character_from_json(artkernel::read_json_file(char_path), g);
  artkernel::SplittingTriple split;
  split.gamma1 = parse_vertex_list(gamma1_csv);
  split.gamma2 = parse_vertex_list(gamma2_csv);
  split.gamma3 = artkernel::set_intersection(split.gamma1, split.gamma2);
  auto report = artkernel::decompose_once(g, f, split);
  auto restrictions = artkernel::restriction_classification(f, g, split);

  Json j = artkernel::dichotomy_to_json(report);
  j["restrictions"] = artkernel::restriction_report_to_json(restrictions);
  std::string dot = report.finite() ? artkernel::gog_to_dot(*report.gog) : "";
  out.emit(j, dot);
  return 0;
}

int run_decompose(const std::string& graph_path, const std::string& char_path, const Output& out) {
  auto g = artkernel::graph_from_json(artkernel::read_json_file(graph_path));
  auto f = artkernel::character_from_json(artkernel::read_json_file(char_path), g);
  auto result = artkernel::chordal_dichotomy(g, f);
  Json j = artkernel::chordal_result_to_json(result);
  std::string dot = result.tame() ? artkernel::gog_to_dot(*result.gog) : "";
  out.emit(j, dot);
  return 0;
}

int run_rank(const std::string& graph_path, const std::string& char_path, const Output& out) {
  auto g = artkernel::graph_from_json(artkernel::read_json_file(graph_path));
  auto f = artkernel::character_from_json(artkernel::read_json_file(char_path), g);
  auto report = artkernel::rank_formula(g, f);
  Json j = artkernel::rank_report_to_json(report);
  j["attains_minimal_rank"] = artkernel::attains_minimal_rank(g, f);
  out.emit(j);
  return 0;
}

int run_minrank(const std::string& graph_path, const Output& out) {
  auto g = artkernel::graph_from_json(artkernel::read_json_file(graph_path));
  auto res = artkernel::minimal_rank(g);
  Json j;
  j["mu"] = res.mu;
  j["cut_vertices"] = res.cut_vertices;
  j["attained_iff"] = "|f(v)| equals the image index at every cut vertex";
  out.emit(j);
  return 0;
}

int run_family_unbounded(const std::string& graph_path, long long n, const Output& out) {
  auto g = artkernel::graph_from_json(artkernel::read_json_file(graph_path));
  auto member = artkernel::unbounded_family(g, n);
  Json j;
  j["n"] = member.n;
  j["character"] = artkernel::character_to_json(member.character);
  j["rank"] = member.rank;
  j["closed_form"] = member.closed_form;
  j["closed_form_applies"] = member.closed_form_applies;
  out.emit(j);
  return 0;
}

int run_family_bounded(const std::string& graph_path, long long q,
                       const std::vector<long long>& ps, const Output& out) {
  auto g = artkernel::graph_from_json(artkernel::read_json_file(graph_path));
  auto family = artkernel::bounded_divergence_family(g, q, ps);
  Json j;
  j["q"] = q;
  Json members = Json::array();
  for (const auto& m : family.members) {
    Json jm;
    jm["p"] = m.p;
    jm["character"] = artkernel::character_to_json(m.character);
    jm["rank"] = m.rank;
    Json ray = Json::object();
    for (const auto& [v, r] : m.ray) ray[v] = r.str();
    jm["normalized_ray"] = ray;
    members.push_back(jm);
  }
  j["members"] = members;
  j["constant_rank"] = family.constant_rank;
  Json limit;
  limit["character"] = artkernel::character_to_json(family.limit);
  limit["classification"] = artkernel::classification_to_json(family.limit_class);
  j["limit"] = limit;
  out.emit(j);
  return 0;
}

int run_witness(const std::string& graph_path, const Output& out) {
  auto g = artkernel::graph_from_json(artkernel::read_json_file(graph_path));
  auto witness = artkernel::nonchordal_witness(g);
  out.emit(artkernel::witness_to_json(witness));
  return 0;
}

int run_selftest(int max_vertices, unsigned long long seed, long long scale, const Output& out) {
  artkernel::sweep::SelftestOptions opts;
  opts.max_vertices = max_vertices;
  opts.seed = seed;
  opts.scale = scale;
  Json j = Json::array();
  bool all_pass = true;
  for (const auto& result : artkernel::sweep::run_selftest(opts)) {
    all_pass = all_pass && result.pass();
    std::cout << (result.pass() ? "PASS" : "FAIL") << " " << result.name << " (checked "
              << result.checked << ", mismatches " << result.mismatches << ")";
    if (!result.note.empty()) std::cout << " [" << result.note << "]";
    std::cout << "\n";
    Json jr;
    jr["name"] = result.name;
    jr["checked"] = result.checked;
    jr["mismatches"] = result.mismatches;
    if (result.missing > 0) jr["missing"] = result.missing;
    if (!result.note.empty()) jr["note"] = result.note;
    jr["pass"] = result.pass();
    j.push_back(jr);
  }
  if (out.format == "json") std::cout << j.dump(2) << "\n";
  return all_pass ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Artin kernels of right-angled Artin groups: finiteness classification, "
               "graph-of-groups decompositions and rank formulas"};
  app.require_subcommand(1);

  Output out;
  app.add_option("--format", out.format, "Output format: json, dot or table")
      ->default_val("json")
      ->check(CLI::IsMember({"json", "dot", "table"}));

  std::string graph_path, char_path, gamma1_csv, gamma2_csv;
  long long family_n = 1, family_q = 1;
  std::vector<long long> family_ps;
  int max_vertices = 8;
  unsigned long long seed = artkernel::sweep::kDefaultSeed;
  long long scale = 1000;

  auto* analyze = app.add_subcommand("analyze", "Graph structure report");
  analyze->add_option("graph", graph_path)->required();

  auto* classify = app.add_subcommand("classify", "Tame/wild classification of a character");
  classify->add_option("graph", graph_path)->required();
  classify->add_option("character", char_path)->required();

  auto* split = app.add_subcommand("split", "Graph-of-groups decomposition along one splitting");
  split->add_option("graph", graph_path)->required();
  split->add_option("character", char_path)->required();
  split->add_option("--gamma1", gamma1_csv, "Comma-separated vertices of the first piece")
      ->required();
  split->add_option("--gamma2", gamma2_csv, "Comma-separated vertices of the second piece")
      ->required();

  auto* decompose = app.add_subcommand("decompose", "Full clique decomposition (chordal graphs)");
  decompose->add_option("graph", graph_path)->required();
  decompose->add_option("character", char_path)->required();

  auto* rank = app.add_subcommand("rank", "Kernel rank over a block graph");
  rank->add_option("graph", graph_path)->required();
  rank->add_option("character", char_path)->required();

  auto* minrank = app.add_subcommand("minrank", "Minimal kernel rank over a block graph");
  minrank->add_option("graph", graph_path)->required();

  auto* family = app.add_subcommand("family", "Extremal character families");
  family->require_subcommand(1);
  auto* unbounded = family->add_subcommand("unbounded", "Characters of unbounded kernel rank");
  unbounded->add_option("graph", graph_path)->required();
  unbounded->add_option("--n", family_n, "Value on cut vertices")->default_val(2);
  auto* bounded = family->add_subcommand("bounded-div",
                                         "Constant-rank family converging to a wild character");
  bounded->add_option("graph", graph_path)->required();
  bounded->add_option("--q", family_q, "Value on cut vertices")->default_val(1);
  bounded->add_option("--p", family_ps, "Values on the remaining vertices (coprime to q)")
      ->required()
      ->delimiter(',');

  auto* witness = app.add_subcommand("witness",
                                     "Neither-wild-nor-tame character on a non-chordal graph");
  witness->add_option("graph", graph_path)->required();

  auto* selftest = app.add_subcommand("selftest", "Run the invariant sweeps");
  selftest->add_option("--max-vertices", max_vertices)->default_val(8);
  selftest->add_option("--seed", seed, "Seed for randomized tie-breaking and sampling")
      ->default_val(artkernel::sweep::kDefaultSeed);
  selftest->add_option("--scale", scale, "Base sample count per sweep")->default_val(1000);

  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (auto* nested : sub->get_subcommands({})) nested->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    auto start = std::chrono::steady_clock::now();
    int code = 0;
    if (*analyze)
      code = run_analyze(graph_path, out);
    else if (*classify)
      code = run_classify(graph_path, char_path, out);
    else if (*split)
      code = run_split(graph_path, char_path, gamma1_csv, gamma2_csv, out);
    else if (*decompose)
      code = run_decompose(graph_path, char_path, out);
    else if (*rank)
      code = run_rank(graph_path, char_path, out);
    else if (*minrank)
      code = run_minrank(graph_path, out);
    else if (*unbounded)
      code = run_family_unbounded(graph_path, family_n, out);
    else if (*bounded)
      code = run_family_bounded(graph_path, family_q, family_ps, out);
    else if (*witness)
      code = run_witness(graph_path, out);
    else if (*selftest)
      code = run_selftest(max_vertices, seed, scale, out);
    if (verbose()) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
      std::cerr << "done in " << ms << " ms\n";
    }
    return code;
  } catch (const artkernel::Error& e) {
    Json err;
    err["error"]["code"] = e.code();
    err["error"]["message"] = e.what();
    std::cout << err.dump(2) << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    Json err;
    err["error"]["code"] = "unexpected";
    err["error"]["message"] = e.what();
    std::cout << err.dump(2) << "\n";
    return 4;
  }
}
