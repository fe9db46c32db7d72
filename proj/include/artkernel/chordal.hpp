#ifndef ARTKERNEL_CHORDAL_HPP
#define ARTKERNEL_CHORDAL_HPP

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "artkernel/character.hpp"
#include "artkernel/errors.hpp"
#include "artkernel/graph.hpp"
#include "artkernel/graph_of_groups.hpp"
#include "artkernel/splitting.hpp"

namespace artkernel {

struct DecompositionStep {
  VertexSet piece, separator, gamma1, gamma2;
};

// Binary tree of clique separations: an internal node splits its piece along
// a minimal (clique) separator into gamma1 = separator u C for one component
// C of the complement and gamma2 = separator u rest; leaves are cliques.
struct DecompositionNode {
  VertexSet piece;
  VertexSet separator;  // empty iff leaf
  std::unique_ptr<DecompositionNode> left, right;

  bool leaf() const { return separator.empty(); }
};

class DecompositionTree {
 public:
  std::unique_ptr<DecompositionNode> root;

  std::vector<DecompositionStep> trace() const {
    std::vector<DecompositionStep> out;
    collect(root.get(), out);
    return out;
  }

  std::vector<const DecompositionNode*> leaves() const {
    std::vector<const DecompositionNode*> out;
    walk(root.get(), [&](const DecompositionNode* n) {
      if (n->leaf()) out.push_back(n);
    });
    return out;
  }

  std::vector<const DecompositionNode*> internal_nodes() const {
    std::vector<const DecompositionNode*> out;
    walk(root.get(), [&](const DecompositionNode* n) {
      if (!n->leaf()) out.push_back(n);
    });
    return out;
  }

 private:
  static void collect(const DecompositionNode* n, std::vector<DecompositionStep>& out) {
    if (!n || n->leaf()) return;
    out.push_back({n->piece, n->separator, n->left->piece, n->right->piece});
    collect(n->left.get(), out);
    collect(n->right.get(), out);
  }

  template <typename F>
  static void walk(const DecompositionNode* n, F&& f) {
    if (!n) return;
    f(n);
    walk(n->left.get(), f);
    walk(n->right.get(), f);
  }
};

namespace detail {

inline std::unique_ptr<DecompositionNode> build_decomposition(const Graph& g,
                                                              const VertexSet& piece,
                                                              std::mt19937_64* rng) {
  auto node = std::make_unique<DecompositionNode>();
  node->piece = piece;
  Graph sub = full_subgraph(g, piece);
  if (is_complete(sub)) return node;
  auto separators = minimal_vertex_separators(sub);
  require_internal(!separators.empty(), "non-complete connected graph must have a separator");
  std::size_t pick = 0;
  if (rng) pick = (*rng)() % separators.size();
  const VertexSet& s = separators[pick];
  require_internal(is_clique(sub, s), "minimal separator of a chordal graph must be a clique");
  node->separator = s;

  // gamma1 must be s plus a FULL component (one seeing all of s); splitting
  // off a partial component would create pieces whose maximal cliques are not
  // maximal in the whole graph, breaking the order independence of the
  // decomposition.
  Graph rest = complement_subgraph(sub, s);
  auto comps = connected_components(rest);
  require_internal(comps.size() >= 2, "separator must disconnect the piece");
  std::vector<std::size_t> full;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    VertexSet seen;
    for (const auto& v : comps[i])
      for (int w : sub.neighbors(sub.index_of(v)))
        if (set_contains(s, sub.name(w))) seen = set_union(seen, {sub.name(w)});
    if (seen == s) full.push_back(i);
  }
  require_internal(full.size() >= 2, "a minimal separator has at least two full components");
  std::size_t first = full[rng ? (*rng)() % full.size() : 0];
  VertexSet gamma1 = set_union(s, comps[first]);
  VertexSet others;
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (i != first) others = set_union(others, comps[i]);
  VertexSet gamma2 = set_union(s, others);
  node->left = build_decomposition(g, gamma1, rng);
  node->right = build_decomposition(g, gamma2, rng);
  return node;
}

// Leaf clique reached from `node` by always descending into the side whose
// piece contains s. When both sides contain s (s inside a deeper separator)
// the left side is taken.
inline const DecompositionNode* leaf_containing(const DecompositionNode* node, const VertexSet& s) {
  const DecompositionNode* cur = node;
  while (!cur->leaf()) {
    if (set_subset(s, cur->left->piece))
      cur = cur->left.get();
    else if (set_subset(s, cur->right->piece))
      cur = cur->right.get();
    else
      throw_internal("lost_separator", "clique separator not contained in either side");
  }
  return cur;
}

// ids carry the leaf ordinal so that exotic vertex names cannot collide
inline std::string clique_vertex_id(std::size_t leaf_ordinal, const VertexSet& clique,
                                    long long residue) {
  std::string id = "K" + std::to_string(leaf_ordinal) + ":";
  for (std::size_t i = 0; i < clique.size(); ++i) {
    if (i) id += "+";
    id += clique[i];
  }
  return id + "#" + std::to_string(residue);
}

}  // namespace detail

// Builds the clique-separator decomposition of a connected chordal graph.
// The default separator choice is the lexicographically smallest minimal
// separator; a seed switches to random choices (used to confirm that the
// decomposition invariants do not depend on the order).
inline DecompositionTree build_clique_decomposition(
    const Graph& g, std::optional<unsigned long long> shuffle_seed = std::nullopt) {
  require_connected(g, "build_clique_decomposition");
  auto chordality = is_chordal(g);
  if (!chordality.chordal)
    throw_precondition("not_chordal", "graph has a chordless cycle of length >= 4");
  DecompositionTree tree;
  if (shuffle_seed) {
    std::mt19937_64 rng(*shuffle_seed);
    tree.root = detail::build_decomposition(g, g.vertex_set(), &rng);
  } else {
    tree.root = detail::build_decomposition(g, g.vertex_set(), nullptr);
  }
  return tree;
}

// Splices the per-node graphs of groups of a decomposition tree into a single
// flat graph of groups. Vertices are copies of leaf cliques K, one per
// residue class mod I_K; each internal node with separator S contributes I_S
// edges, the edge with residue t attaching on either side to the sub-vertex
// whose residue class is t mod I_K of the leaf clique containing S.
inline GraphOfGroups flatten(const Graph& g, const Character& f, const DecompositionTree& tree) {
  f.check_keys(g);
  long long d = image_on(f, g.vertex_set());
  require_internal(d > 0, "flatten requires a nonzero character");

  GraphOfGroups gog;
  auto leaves = tree.leaves();
  std::map<const DecompositionNode*, std::size_t> leaf_ordinal;
  for (std::size_t i = 0; i < leaves.size(); ++i) leaf_ordinal[leaves[i]] = i;
  for (const auto* leaf : leaves) {
    long long dk = image_on(f, leaf->piece);
    require_internal(dk > 0 && dk % d == 0, "leaf clique must carry a nonzero restriction");
    long long copies = dk / d;
    for (long long r = 0; r < copies; ++r) {
      GogVertex v;
      v.id = detail::clique_vertex_id(leaf_ordinal.at(leaf), leaf->piece, r);
      v.residue = r;
      v.subgraph = leaf->piece;
      v.group = GroupDescriptor::free_abelian(static_cast<long long>(leaf->piece.size()) - 1);
      gog.vertices.push_back(std::move(v));
    }
  }
  auto internals = tree.internal_nodes();
  for (std::size_t n = 0; n < internals.size(); ++n) {
    const auto* node = internals[n];
    long long ds = image_on(f, node->separator);
    require_internal(ds > 0 && ds % d == 0, "separator must carry a nonzero restriction");
    long long edge_copies = ds / d;
    const auto* left_leaf = detail::leaf_containing(node->left.get(), node->separator);
    const auto* right_leaf = detail::leaf_containing(node->right.get(), node->separator);
    long long left_copies = image_on(f, left_leaf->piece) / d;
    long long right_copies = image_on(f, right_leaf->piece) / d;
    require_internal(edge_copies % left_copies == 0 && edge_copies % right_copies == 0,
                     "leaf residue count must divide separator residue count");
    for (long long t = 0; t < edge_copies; ++t) {
      GogEdge e;
      e.id = "s" + std::to_string(n) + "#" + std::to_string(t);
      e.residue = t;
      e.subgraph = node->separator;
      e.group = GroupDescriptor::free_abelian(static_cast<long long>(node->separator.size()) - 1);
      e.end1 = detail::clique_vertex_id(leaf_ordinal.at(left_leaf), left_leaf->piece,
                                        t % left_copies);
      e.end2 = detail::clique_vertex_id(leaf_ordinal.at(right_leaf), right_leaf->piece,
                                        t % right_copies);
      gog.edges.push_back(std::move(e));
    }
  }
  gog.validate(/*expect_bipartite=*/false);
  require_internal(gog.betti() >= 0, "flattened graph of groups has negative betti number");
  gog.canonicalize();
  return gog;
}

struct ChordalResult {
  std::optional<GraphOfGroups> gog;  // tame: finite graph of free abelian groups
  std::optional<WildSurjection> wild;
  std::vector<DecompositionStep> trace;
  Classification classification;

  bool tame() const { return gog.has_value(); }
};

// Complete tame/wild dichotomy over a connected chordal graph: a wild kernel
// is reported with its witness, a tame kernel is decomposed down to maximal
// cliques.
inline ChordalResult chordal_dichotomy(const Graph& g, const Character& f,
                                       std::optional<unsigned long long> shuffle_seed = std::nullopt) {
  require_connected(g, "chordal_dichotomy");
  auto chordality = is_chordal(g);
  if (!chordality.chordal)
    throw_precondition("not_chordal", "graph has a chordless cycle of length >= 4");
  f.check_keys(g);

  ChordalResult res;
  res.classification = classify(f, g);
  if (res.classification.kind == KernelClass::Wild) {
    WildSurjection wild;
    wild.reason = res.classification.witness_kind == "link" ? "dead_link" : "dead_subgraph";
    wild.witness = res.classification.witness;
    wild.detail = "separating subgraph inside the dead subgraph";
    res.wild = std::move(wild);
    return res;
  }
  auto tree = build_clique_decomposition(g, shuffle_seed);
  res.trace = tree.trace();
  res.gog = flatten(g, f, tree);
  return res;
}

}  // namespace artkernel

#endif  // ARTKERNEL_CHORDAL_HPP
