#ifndef ARTKERNEL_GRAPH_OF_GROUPS_HPP
#define ARTKERNEL_GRAPH_OF_GROUPS_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "artkernel/errors.hpp"
#include "artkernel/group.hpp"

namespace artkernel {

// Finite multigraph with group-labelled vertices and edges. Loops are
// forbidden. Vertices produced by a single splitting carry a bipartition
// side (1 or 2); flattened decompositions leave side = 0.
struct GogVertex {
  std::string id;
  int side = 0;
  long long residue = 0;
  GroupDescriptor group;
  VertexSet subgraph;
};

struct GogEdge {
  std::string id;
  long long residue = 0;
  GroupDescriptor group;
  VertexSet subgraph;
  std::string end1, end2;
};

class GraphOfGroups {
 public:
  std::vector<GogVertex> vertices;
  std::vector<GogEdge> edges;

  const GogVertex& vertex(const std::string& id) const {
    for (const auto& v : vertices)
      if (v.id == id) return v;
    throw_internal("missing_vertex", "graph of groups has no vertex '" + id + "'");
  }

  long long betti() const {
    return static_cast<long long>(edges.size()) - static_cast<long long>(vertices.size()) + 1;
  }

  bool connected() const {
    if (vertices.empty()) return false;
    std::map<std::string, int> idx;
    for (std::size_t i = 0; i < vertices.size(); ++i) idx[vertices[i].id] = static_cast<int>(i);
    std::vector<std::vector<int>> adj(vertices.size());
    for (const auto& e : edges) {
      adj[static_cast<std::size_t>(idx.at(e.end1))].push_back(idx.at(e.end2));
      adj[static_cast<std::size_t>(idx.at(e.end2))].push_back(idx.at(e.end1));
    }
    std::vector<bool> seen(vertices.size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<std::size_t>(v)])
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          stack.push_back(w);
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  }

  // Structural sanity; bipartiteness is only demanded for one-step
  // decompositions (side tags present).
  void validate(bool expect_bipartite) const {
    require_internal(!vertices.empty(), "graph of groups must have a vertex");
    std::map<std::string, const GogVertex*> byid;
    for (const auto& v : vertices) {
      require_internal(byid.emplace(v.id, &v).second, "duplicate vertex id in graph of groups");
    }
    for (const auto& e : edges) {
      require_internal(byid.count(e.end1) == 1 && byid.count(e.end2) == 1,
                       "edge endpoint missing in graph of groups");
      require_internal(e.end1 != e.end2, "graph of groups must be loop-free");
      if (expect_bipartite)
        require_internal(byid.at(e.end1)->side + byid.at(e.end2)->side == 3,
                         "one-step graph of groups must be bipartite across sides");
    }
    require_internal(connected(), "graph of groups must be connected");
  }

  // Stable presentation order: vertices by (rank, subgraph, residue), edges by
  // (rank, endpoints, residue).
  void canonicalize() {
    auto desc_rank = [](const GroupDescriptor& d) {
      auto r = d.rank_if_known();
      return r ? *r : static_cast<long long>(-1);
    };
    std::sort(vertices.begin(), vertices.end(), [&](const GogVertex& a, const GogVertex& b) {
      long long ra = desc_rank(a.group), rb = desc_rank(b.group);
      if (ra != rb) return ra > rb;
      if (a.subgraph != b.subgraph) return a.subgraph < b.subgraph;
      return a.residue < b.residue;
    });
    std::sort(edges.begin(), edges.end(), [&](const GogEdge& a, const GogEdge& b) {
      long long ra = desc_rank(a.group), rb = desc_rank(b.group);
      if (ra != rb) return ra > rb;
      if (a.end1 != b.end1) return a.end1 < b.end1;
      if (a.end2 != b.end2) return a.end2 < b.end2;
      return a.residue < b.residue;
    });
  }
};

// First Betti number |E| - |V| + 1 of a connected graph of groups.
inline long long betti_number(const GraphOfGroups& gog) {
  require_internal(gog.connected(), "betti_number requires a connected graph of groups");
  return gog.betti();
}

// Free product form when all edge groups are trivial: F_{b1} * (vertex
// groups). Throws when some edge group is nontrivial.
inline GroupDescriptor free_product_form(const GraphOfGroups& gog) {
  for (const auto& e : gog.edges)
    if (!e.group.is_trivial())
      throw_precondition("nontrivial_edge_group",
                         "free_product_form requires all edge groups trivial");
  std::vector<GroupDescriptor> factors;
  long long b1 = betti_number(gog);
  if (b1 > 0) factors.push_back(GroupDescriptor::free_group(b1));
  for (const auto& v : gog.vertices) factors.push_back(v.group);
  return canonical_free_product(factors);
}

}  // namespace artkernel

#endif  // ARTKERNEL_GRAPH_OF_GROUPS_HPP
