#ifndef ARTKERNEL_SPLITTING_HPP
#define ARTKERNEL_SPLITTING_HPP

#include <optional>
#include <string>
#include <vector>

#include "artkernel/character.hpp"
#include "artkernel/errors.hpp"
#include "artkernel/graph.hpp"
#include "artkernel/graph_of_groups.hpp"
#include "artkernel/group.hpp"

namespace artkernel {

// A decomposition of the graph into two full subgraphs meeting along a third:
// gamma1 u gamma2 = V, gamma1 n gamma2 = gamma3, all nonempty and pairwise
// distinct, and no edge joins gamma1\gamma3 to gamma2\gamma3.
struct SplittingTriple {
  VertexSet gamma1, gamma2, gamma3;
};

struct SplittingCheck {
  bool valid = true;
  std::vector<std::string> violations;
  bool gamma3_connected = false;
};

inline SplittingCheck check_splitting(const Graph& g, const SplittingTriple& t) {
  SplittingCheck res;
  auto fail = [&](const std::string& why) {
    res.valid = false;
    res.violations.push_back(why);
  };
  for (const auto* s : {&t.gamma1, &t.gamma2, &t.gamma3}) {
    for (const auto& v : *s)
      if (!g.has_vertex(v)) fail("unknown_vertex:" + v);
  }
  if (!res.valid) return res;
  if (t.gamma1.empty() || t.gamma2.empty() || t.gamma3.empty()) fail("empty_piece");
  if (t.gamma1 == t.gamma2 || t.gamma1 == t.gamma3 || t.gamma2 == t.gamma3)
    fail("pieces_not_distinct");
  if (set_union(t.gamma1, t.gamma2) != g.vertex_set()) fail("union_not_whole_graph");
  if (set_intersection(t.gamma1, t.gamma2) != t.gamma3) fail("gamma3_not_intersection");
  // Full subgraphs make E(G1) u E(G2) = E(G) equivalent to the absence of
  // cross edges, and E(G3) = E(G1) n E(G2) automatic.
  auto only1 = set_difference(t.gamma1, t.gamma3);
  auto only2 = set_difference(t.gamma2, t.gamma3);
  for (const auto& u : only1)
    for (const auto& v : only2)
      if (g.has_vertex(u) && g.has_vertex(v) && g.adjacent(u, v))
        fail("cross_edge:" + u + "-" + v);
  if (res.valid && !t.gamma3.empty())
    res.gamma3_connected = is_connected(full_subgraph(g, t.gamma3));
  return res;
}

inline SplittingTriple validate_splitting(const Graph& g, const SplittingTriple& t) {
  auto check = check_splitting(g, t);
  if (!check.valid) {
    std::string msg = "invalid splitting:";
    for (const auto& v : check.violations) msg += " " + v;
    throw_input("invalid_splitting", msg);
  }
  return t;
}

// Wild outcome of a decomposition. For a single splitting the case tags
// follow the two shapes of the infinite quotient graph; the classification
// route reports which separating subgraph of the dead part was found.
struct WildSurjection {
  // "f3_zero_bigons" | "f3_zero_star" | "dead_subgraph" | "dead_link"
  std::string reason;
  VertexSet witness;
  std::string detail;
};

struct DichotomyReport {
  std::optional<GraphOfGroups> gog;  // finite case
  std::optional<WildSurjection> wild;
  ExtendedIndex index1, index2, index3;

  bool finite() const { return gog.has_value(); }
};

namespace detail {

// Vertex/edge group for a piece with nonzero restriction: cliques resolve to
// free abelian groups immediately, everything else stays a kernel descriptor
// flagged by whether its kernel is finitely generated.
inline GroupDescriptor piece_descriptor(const Graph& g, const Character& f, const VertexSet& piece) {
  Character restricted = f.restrict_to(piece);
  require_internal(!restricted.is_zero(), "piece descriptor needs a nonzero restriction");
  Graph sub = full_subgraph(g, piece);
  if (is_complete(sub))
    return GroupDescriptor::free_abelian(static_cast<long long>(piece.size()) - 1);
  if (classify_restriction(sub, restricted) == RestrictionClass::NonFgKernel)
    return GroupDescriptor::wild_kernel(piece, restricted);
  return GroupDescriptor::unresolved_kernel(piece, restricted);
}

}  // namespace detail

// One splitting step. With d_k the generator of f's image on gamma_k and
// I_k = d_k/d the index in the whole image: the kernel decomposes as a
// bipartite graph of groups with I_1 + I_2 vertices and I_3 edges, edge j
// joining the side-1 vertex j mod I_1 and the side-2 vertex j mod I_2. When
// f vanishes on gamma3 the quotient graph is infinite and the kernel
// surjects onto an infinite-rank free group.
inline DichotomyReport decompose_once(const Graph& g, const Character& f,
                                      const SplittingTriple& split) {
  require_connected(g, "decompose_once");
  f.check_keys(g);
  validate_splitting(g, split);
  if (f.is_zero()) throw_input("zero_character", "the zero character is not allowed");

  DichotomyReport report;
  long long d = image_on(f, g.vertex_set());
  long long d1 = image_on(f, split.gamma1);
  long long d2 = image_on(f, split.gamma2);
  long long d3 = image_on(f, split.gamma3);
  report.index1 = d1 == 0 ? ExtendedIndex::inf() : ExtendedIndex::finite(d1 / d);
  report.index2 = d2 == 0 ? ExtendedIndex::inf() : ExtendedIndex::finite(d2 / d);
  report.index3 = d3 == 0 ? ExtendedIndex::inf() : ExtendedIndex::finite(d3 / d);

  if (d3 == 0) {
    WildSurjection wild;
    wild.witness = split.gamma3;
    if (d1 != 0 && d2 != 0) {
      wild.reason = "f3_zero_bigons";
      wild.detail =
          "finitely many vertices and infinitely many edges: the quotient graph "
          "contains infinitely many bigons";
    } else {
      wild.reason = "f3_zero_star";
      int zero_side = d1 == 0 ? 1 : 2;
      wild.detail = "restriction to gamma" + std::to_string(zero_side) +
                    " vanishes: the quotient graph is an infinite star";
    }
    report.wild = std::move(wild);
    return report;
  }

  long long i1 = d1 / d, i2 = d2 / d, i3 = d3 / d;
  require_internal(i3 % i1 == 0 && i3 % i2 == 0, "edge index must be a common multiple");

  GraphOfGroups gog;
  auto vertex_id = [](int side, long long r) {
    return "v" + std::to_string(side) + "." + std::to_string(r);
  };
  for (long long r = 0; r < i1; ++r) {
    GogVertex v;
    v.id = vertex_id(1, r);
    v.side = 1;
    v.residue = r;
    v.subgraph = split.gamma1;
    v.group = detail::piece_descriptor(g, f, split.gamma1);
    gog.vertices.push_back(std::move(v));
  }
  for (long long r = 0; r < i2; ++r) {
    GogVertex v;
    v.id = vertex_id(2, r);
    v.side = 2;
    v.residue = r;
    v.subgraph = split.gamma2;
    v.group = detail::piece_descriptor(g, f, split.gamma2);
    gog.vertices.push_back(std::move(v));
  }
  for (long long j = 0; j < i3; ++j) {
    GogEdge e;
    e.id = "e." + std::to_string(j);
    e.residue = j;
    e.subgraph = split.gamma3;
    e.group = detail::piece_descriptor(g, f, split.gamma3);
    e.end1 = vertex_id(1, j % i1);
    e.end2 = vertex_id(2, j % i2);
    gog.edges.push_back(std::move(e));
  }
  gog.validate(/*expect_bipartite=*/true);
  require_internal(gog.betti() == i3 - i1 - i2 + 1, "betti number must match index count");
  report.gog = std::move(gog);
  return report;
}

// Per-restriction classification across a splitting, with the two implication
// checks relating finite generation of the whole kernel to the pieces.
struct RestrictionReport {
  SplittingTriple split;
  bool gamma3_connected = false;
  RestrictionClass r1, r2, r3;
  bool kernel_fg = false;
  // ker(f) fg implies f3 nonzero.
  bool fg_forces_f3_nonzero = false;
  // ker(f) fg, ker(f3) fg and gamma3 connected imply ker(f1), ker(f2) fg.
  bool tame_propagates = false;
};

inline RestrictionReport restriction_classification(const Character& f, const Graph& g,
                                                    const SplittingTriple& split) {
  require_connected(g, "restriction_classification");
  f.check_keys(g);
  validate_splitting(g, split);
  RestrictionReport rep;
  rep.split = split;
  rep.gamma3_connected = check_splitting(g, split).gamma3_connected;
  rep.r1 = classify_restriction(full_subgraph(g, split.gamma1), f.restrict_to(split.gamma1));
  rep.r2 = classify_restriction(full_subgraph(g, split.gamma2), f.restrict_to(split.gamma2));
  rep.r3 = classify_restriction(full_subgraph(g, split.gamma3), f.restrict_to(split.gamma3));
  rep.kernel_fg = kernel_is_fg(f, g);
  rep.fg_forces_f3_nonzero = !rep.kernel_fg || rep.r3 != RestrictionClass::Zero;
  rep.tame_propagates =
      !(rep.kernel_fg && rep.r3 == RestrictionClass::FgKernel && rep.gamma3_connected) ||
      (rep.r1 == RestrictionClass::FgKernel && rep.r2 == RestrictionClass::FgKernel);
  require_internal(rep.fg_forces_f3_nonzero,
                   "fg kernel with vanishing separator restriction is impossible");
  require_internal(rep.tame_propagates,
                   "fg kernel over a connected tame splitting must induce fg pieces");
  return rep;
}

}  // namespace artkernel

#endif  // ARTKERNEL_SPLITTING_HPP
