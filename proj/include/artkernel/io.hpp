#ifndef ARTKERNEL_IO_HPP
#define ARTKERNEL_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "artkernel/blockgraph.hpp"
#include "artkernel/character.hpp"
#include "artkernel/chordal.hpp"
#include "artkernel/errors.hpp"
#include "artkernel/graph.hpp"
#include "artkernel/graph_of_groups.hpp"
#include "artkernel/splitting.hpp"

namespace artkernel {

// Deterministic key order so identical inputs give byte-identical reports.
using Json = nlohmann::ordered_json;

// ---- graphs ----------------------------------------------------------------

// {"vertices": ["a", ...], "edges": [["a","b"], ...]}
inline Graph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw_input("bad_graph_json", "graph JSON needs 'vertices' and 'edges'");
  std::vector<VertexId> vertices;
  for (const auto& v : j.at("vertices")) {
    if (!v.is_string()) throw_input("bad_graph_json", "vertex names must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw_input("bad_graph_json", "edges must be pairs of vertex names");
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return Graph(std::move(vertices), edges);
}

inline Json graph_to_json(const Graph& g) {
  Json j;
  j["vertices"] = g.vertices();
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
  j["edges"] = edges;
  return j;
}

inline std::string graph_to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (const auto& v : g.vertices()) out << "  \"" << v << "\";\n";
  for (const auto& [u, v] : g.edges()) out << "  \"" << u << "\" -- \"" << v << "\";\n";
  out << "}\n";
  return out.str();
}

// ---- characters ------------------------------------------------------------

// {"weights": {"a": 1, "b": "3/2", ...}}
inline Character character_from_json(const Json& j, const Graph& g) {
  if (!j.is_object() || !j.contains("weights") || !j.at("weights").is_object())
    throw_input("bad_character_json", "character JSON needs a 'weights' object");
  std::map<VertexId, Rational> raw;
  for (const auto& [key, value] : j.at("weights").items()) {
    if (value.is_number_integer())
      raw.emplace(key, Rational(value.get<long long>()));
    else if (value.is_string())
      raw.emplace(key, parse_rational(value.get<std::string>()));
    else
      throw_input("bad_character_json",
                  "weight of '" + key + "' must be an integer or a 'p/q' string");
  }
  auto f = Character::normalize(raw);
  f.check_keys(g);
  return f;
}

inline Json weights_to_json(const Character& f) {
  Json w = Json::object();
  for (const auto& [v, value] : f.weights()) w[v] = value;
  return w;
}

inline Json character_to_json(const Character& f) {
  Json j;
  j["weights"] = weights_to_json(f);
  return j;
}

// ---- group descriptors and graphs of groups --------------------------------

inline Json descriptor_to_json(const GroupDescriptor& d) {
  Json j;
  switch (d.kind) {
    case GroupDescriptor::Kind::FreeAbelian:
      j["type"] = "free_abelian";
      j["rank"] = d.rank;
      break;
    case GroupDescriptor::Kind::Free:
      j["type"] = "free";
      if (d.infinite_rank)
        j["rank"] = "infinite";
      else
        j["rank"] = d.rank;
      break;
    case GroupDescriptor::Kind::FreeProduct: {
      j["type"] = "free_product";
      Json factors = Json::array();
      for (const auto& f : d.factors) factors.push_back(descriptor_to_json(f));
      j["factors"] = factors;
      break;
    }
    case GroupDescriptor::Kind::UnresolvedKernel:
    case GroupDescriptor::Kind::WildKernel:
      j["type"] = d.kind == GroupDescriptor::Kind::WildKernel ? "wild_kernel" : "unresolved_kernel";
      j["subgraph"] = d.subgraph;
      j["weights"] = weights_to_json(d.character);
      break;
  }
  return j;
}

inline Json gog_to_json(const GraphOfGroups& gog) {
  Json j;
  Json vertices = Json::array();
  for (const auto& v : gog.vertices) {
    Json jv;
    jv["id"] = v.id;
    if (v.side != 0) jv["side"] = v.side;
    jv["residue"] = v.residue;
    jv["subgraph"] = v.subgraph;
    jv["group"] = descriptor_to_json(v.group);
    vertices.push_back(jv);
  }
  j["vertices"] = vertices;
  Json edges = Json::array();
  for (const auto& e : gog.edges) {
    Json je;
    je["id"] = e.id;
    je["residue"] = e.residue;
    je["ends"] = Json::array({e.end1, e.end2});
    je["subgraph"] = e.subgraph;
    je["group"] = descriptor_to_json(e.group);
    edges.push_back(je);
  }
  j["edges"] = edges;
  j["betti"] = gog.betti();
  return j;
}

inline std::string gog_to_dot(const GraphOfGroups& gog) {
  std::ostringstream out;
  out << "graph gog {\n";
  for (const auto& v : gog.vertices)
    out << "  \"" << v.id << "\" [label=\"" << v.group.label() << "\"];\n";
  for (const auto& e : gog.edges)
    out << "  \"" << e.end1 << "\" -- \"" << e.end2 << "\" [label=\"" << e.group.label()
        << "\"];\n";
  out << "}\n";
  return out.str();
}

// ---- reports ---------------------------------------------------------------

inline Json classification_to_json(const Classification& c) {
  Json j;
  j["class"] = c.kind == KernelClass::FinitelyGenerated ? "fg" : "wild";
  j["living"] = c.living;
  j["dead"] = c.dead;
  if (c.kind == KernelClass::Wild) {
    j["witness"] = c.witness;
    j["witness_kind"] = c.witness_kind;
    if (c.witness_kind == "link") j["link_vertex"] = c.link_vertex;
  }
  return j;
}

inline Json extended_index_to_json(const ExtendedIndex& i) {
  if (i.infinite) return Json("infinite");
  return Json(i.value);
}

inline Json wild_surjection_to_json(const WildSurjection& w) {
  Json j;
  j["result"] = "wild";
  j["reason"] = w.reason;
  j["witness"] = w.witness;
  j["detail"] = w.detail;
  return j;
}

inline Json dichotomy_to_json(const DichotomyReport& r) {
  Json j;
  j["result"] = r.finite() ? "finite_graph_of_groups" : "wild";
  j["index1"] = extended_index_to_json(r.index1);
  j["index2"] = extended_index_to_json(r.index2);
  j["index3"] = extended_index_to_json(r.index3);
  if (r.finite())
    j["graph_of_groups"] = gog_to_json(*r.gog);
  else
    j["wild"] = wild_surjection_to_json(*r.wild);
  return j;
}

inline Json restriction_report_to_json(const RestrictionReport& r) {
  Json j;
  j["gamma1"] = r.split.gamma1;
  j["gamma2"] = r.split.gamma2;
  j["gamma3"] = r.split.gamma3;
  j["gamma3_connected"] = r.gamma3_connected;
  j["restriction1"] = restriction_class_name(r.r1);
  j["restriction2"] = restriction_class_name(r.r2);
  j["restriction3"] = restriction_class_name(r.r3);
  j["kernel_fg"] = r.kernel_fg;
  j["fg_forces_f3_nonzero"] = r.fg_forces_f3_nonzero;
  j["tame_propagates"] = r.tame_propagates;
  return j;
}

inline Json trace_to_json(const std::vector<DecompositionStep>& trace) {
  Json out = Json::array();
  for (const auto& step : trace) {
    Json js;
    js["piece"] = step.piece;
    js["separator"] = step.separator;
    js["gamma1"] = step.gamma1;
    js["gamma2"] = step.gamma2;
    out.push_back(js);
  }
  return out;
}

inline Json chordal_result_to_json(const ChordalResult& r) {
  Json j;
  j["class"] = r.tame() ? "tame" : "wild";
  j["classification"] = classification_to_json(r.classification);
  if (r.tame()) {
    j["graph_of_groups"] = gog_to_json(*r.gog);
    j["trace"] = trace_to_json(r.trace);
    bool trivial_edges = true;
    for (const auto& e : r.gog->edges) trivial_edges = trivial_edges && e.group.is_trivial();
    if (trivial_edges) {
      auto fp = free_product_form(*r.gog);
      j["free_product"] = descriptor_to_json(fp);
      auto rank = fp.rank_if_known();
      if (rank) j["rank"] = *rank;
    }
  } else {
    j["wild"] = wild_surjection_to_json(*r.wild);
  }
  return j;
}

inline Json rank_report_to_json(const RankReport& r) {
  Json j;
  j["rank"] = r.rank;
  j["m"] = r.m;
  Json terms = Json::array();
  for (const auto& t : r.block_terms) {
    Json jt;
    jt["block"] = t.block;
    jt["index"] = t.index;
    jt["size"] = t.size;
    terms.push_back(jt);
  }
  j["block_terms"] = terms;
  j["decomposition"] = descriptor_to_json(r.decomposition);
  return j;
}

inline Json witness_to_json(const NonchordalWitness& w) {
  Json j;
  j["character"] = character_to_json(w.character);
  Json split;
  split["gamma1"] = w.splitting.gamma1;
  split["gamma2"] = w.splitting.gamma2;
  split["gamma3"] = w.splitting.gamma3;
  j["splitting"] = split;
  j["gamma3_connected"] = w.gamma3_connected;
  j["lambda"] = w.lambda;
  j["classification"] = classification_to_json(w.character_class);
  j["gamma3_restriction"] = restriction_class_name(w.gamma3_class);
  return j;
}

// ---- files and sweep tables --------------------------------------------------

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw_input("missing_file", "cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw_input("malformed_json", "cannot parse '" + path + "': " + e.what());
  }
  return j;
}

struct SweepRow {
  std::string graph_id;
  std::string character;
  long long m = 0;
  long long rank = 0;
  std::string kernel_class;
};

inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "graph_id,character,m,rank,class\n";
  for (const auto& r : rows)
    out << r.graph_id << "," << r.character << "," << r.m << "," << r.rank << ","
        << r.kernel_class << "\n";
  return out.str();
}

inline std::string character_compact(const Character& f) {
  std::string s;
  for (const auto& [v, w] : f.weights()) {
    if (!s.empty()) s += ";";
    s += v + "=" + std::to_string(w);
  }
  return s;
}

}  // namespace artkernel

#endif  // ARTKERNEL_IO_HPP
