#ifndef ARTKERNEL_BLOCKGRAPH_HPP
#define ARTKERNEL_BLOCKGRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "artkernel/character.hpp"
#include "artkernel/errors.hpp"
#include "artkernel/graph.hpp"
#include "artkernel/group.hpp"
#include "artkernel/splitting.hpp"

namespace artkernel {

namespace detail {

inline void require_nonzero_on_cuts(const Graph& g, const Character& f, const std::string& op) {
  for (const auto& v : cut_vertices(g))
    if (f.value(v) == 0)
      throw_precondition("wild_input", op + ": character vanishes on cut vertex '" + v +
                                           "', so the kernel surjects onto an infinite-rank "
                                           "free group");
}

}  // namespace detail

// m(G,f) = 1 - sum_B I_{G,B} + sum_v (bldeg(v)-1) |f(v)| / I_G, the rank of
// the free part split off by the block decomposition.
inline long long m_value(const Graph& g, const Character& f) {
  require_connected(g, "m_value");
  f.check_keys(g);
  if (f.is_zero()) throw_input("zero_character", "the zero character is not allowed");
  detail::require_nonzero_on_cuts(g, f, "m_value");
  long long d = image_on(f, g.vertex_set());
  auto bs = blocks(g);
  std::map<VertexId, int> bldeg;
  for (const auto& v : g.vertices()) bldeg[v] = 0;
  long long m = 1;
  for (const auto& b : bs) {
    long long db = image_on(f, b);
    require_internal(db > 0 && db % d == 0, "block image must be a nonzero multiple");
    m -= db / d;
    for (const auto& v : b) ++bldeg[v];
  }
  for (const auto& v : g.vertices()) {
    long long w = std::llabs(f.value(v));
    require_internal(w % d == 0, "weights are multiples of the image generator");
    m += (bldeg[v] - 1) * (w / d);
  }
  require_internal(m >= 0, "m(G,f) must be nonnegative when cut vertices are alive");
  return m;
}

// One step of the block-peeling recursion, recorded for auditing: the piece
// splits along its unique cut vertex v0 into a leaf block B0 and the rest.
struct PeelStep {
  VertexSet piece, leaf_block, rest;
  VertexId cut_vertex;
  long long b1 = 0;           // Betti number of the one-step quotient graph
  long long index_rest = 1;   // I_{piece,rest}
  long long index_block = 1;  // I_{piece,B0}
  long long edge_count = 0;   // |f(v0)| / I_piece
  long long m_piece = 0, m_rest = 0;
};

struct BlockSplit {
  GroupDescriptor descriptor;  // F_m * (prod over blocks of kernel copies)
  std::vector<PeelStep> steps;
  long long m = 0;
};

namespace detail {

inline GroupDescriptor peel_blocks(const Graph& g, const Character& f, const VertexSet& piece,
                                   std::vector<PeelStep>& steps) {
  Graph sub = full_subgraph(g, piece);
  Character f_piece = f.restrict_to(piece);
  auto bs = blocks(sub);
  if (bs.size() == 1) return GroupDescriptor::unresolved_kernel(piece, f_piece);

  auto cuts = cut_vertices(sub);
  // leaf block: meets exactly one cut vertex
  VertexSet leaf, leaf_cut_hits;
  for (const auto& b : bs) {
    VertexSet hits = set_intersection(b, cuts);
    if (hits.size() == 1) {
      leaf = b;
      leaf_cut_hits = hits;
      break;  // blocks are sorted, first hit is canonical
    }
  }
  require_internal(!leaf.empty(), "a graph with two or more blocks has a leaf block");
  VertexId v0 = leaf_cut_hits.front();
  VertexSet rest = set_union(set_difference(piece, leaf), VertexSet{v0});

  long long dp = image_on(f, piece);
  long long dr = image_on(f, rest);
  long long db = image_on(f, leaf);
  long long dv = std::llabs(f.value(v0));
  require_internal(dp > 0 && dr % dp == 0 && db % dp == 0 && dv % dp == 0,
                   "peel indices must be finite");

  PeelStep step;
  step.piece = piece;
  step.leaf_block = leaf;
  step.rest = rest;
  step.cut_vertex = v0;
  step.index_rest = dr / dp;
  step.index_block = db / dp;
  step.edge_count = dv / dp;
  step.b1 = 1 - (step.index_rest + step.index_block) + step.edge_count;
  step.m_piece = m_value(sub, f_piece);
  step.m_rest = m_value(full_subgraph(g, rest), f.restrict_to(rest));
  require_internal(step.b1 >= 0, "peel step must have nonnegative betti number");
  steps.push_back(step);

  GroupDescriptor rest_descriptor = peel_blocks(g, f, rest, steps);
  std::vector<GroupDescriptor> factors;
  factors.push_back(GroupDescriptor::free_group(step.b1));
  for (long long i = 0; i < step.index_block; ++i)
    factors.push_back(GroupDescriptor::unresolved_kernel(leaf, f.restrict_to(leaf)));
  for (long long i = 0; i < step.index_rest; ++i) factors.push_back(rest_descriptor);
  return canonical_free_product(factors);
}

}  // namespace detail

// Block decomposition of the kernel over any connected graph with
// the character alive on all cut vertices: peels one leaf block at a time and
// splits off a free factor per step. Serves as the independent recursion
// against which the closed rank formula is checked.
inline BlockSplit split_blocks(const Graph& g, const Character& f) {
  require_connected(g, "split_blocks");
  f.check_keys(g);
  if (f.is_zero()) throw_input("zero_character", "the zero character is not allowed");
  detail::require_nonzero_on_cuts(g, f, "split_blocks");
  BlockSplit out;
  out.m = m_value(g, f);
  out.descriptor = detail::peel_blocks(g, f, g.vertex_set(), out.steps);
  return out;
}

// Replaces every kernel descriptor over a clique by the free abelian group of
// corank one, recursively.
inline GroupDescriptor resolve_clique_kernels(const Graph& g, const GroupDescriptor& d) {
  switch (d.kind) {
    case GroupDescriptor::Kind::FreeProduct: {
      std::vector<GroupDescriptor> factors;
      factors.reserve(d.factors.size());
      for (const auto& part : d.factors) factors.push_back(resolve_clique_kernels(g, part));
      return canonical_free_product(factors);
    }
    case GroupDescriptor::Kind::UnresolvedKernel:
      if (is_clique(g, d.subgraph))
        return GroupDescriptor::free_abelian(static_cast<long long>(d.subgraph.size()) - 1);
      return d;
    default:
      return d;
  }
}

struct RankReport {
  long long m = 0;
  struct BlockTerm {
    VertexSet block;
    long long index = 1;  // I_{G,B}
    int size = 0;         // |V B|
  };
  std::vector<BlockTerm> block_terms;
  long long rank = 0;
  GroupDescriptor decomposition;
};

// Closed rank formula over a connected block graph:
//   rk(ker f) = 1 + sum_B I_{G,B}(|V B|-2) + sum_v (bldeg(v)-1)|f(v)|/I_G.
inline RankReport rank_formula(const Graph& g, const Character& f) {
  require_connected(g, "rank_formula");
  f.check_keys(g);
  if (!is_block_graph(g))
    throw_precondition("not_block_graph", "rank_formula requires a block graph");
  if (f.is_zero()) throw_input("zero_character", "the zero character is not allowed");
  detail::require_nonzero_on_cuts(g, f, "rank_formula");

  RankReport rep;
  rep.m = m_value(g, f);
  long long d = image_on(f, g.vertex_set());
  std::vector<GroupDescriptor> factors;
  factors.push_back(GroupDescriptor::free_group(rep.m));
  rep.rank = rep.m;
  for (const auto& b : blocks(g)) {
    RankReport::BlockTerm term;
    term.block = b;
    term.index = image_on(f, b) / d;
    term.size = static_cast<int>(b.size());
    rep.rank += term.index * (term.size - 1);
    for (long long i = 0; i < term.index; ++i)
      factors.push_back(GroupDescriptor::free_abelian(term.size - 1));
    rep.block_terms.push_back(std::move(term));
  }
  rep.decomposition = canonical_free_product(factors);
  auto known = rep.decomposition.rank_if_known();
  require_internal(known && *known == rep.rank, "decomposition rank must match the formula");
  return rep;
}

struct MinimalRank {
  long long mu = 0;
  // rank == mu holds exactly when |f(v)| equals the image index I_G at every
  // cut vertex.
  VertexSet cut_vertices;
};

inline MinimalRank minimal_rank(const Graph& g) {
  require_connected(g, "minimal_rank");
  if (!is_block_graph(g))
    throw_precondition("not_block_graph", "minimal_rank requires a block graph");
  MinimalRank res;
  res.cut_vertices = cut_vertices(g);
  res.mu = 1;
  std::map<VertexId, int> bldeg;
  for (const auto& v : g.vertices()) bldeg[v] = 0;
  for (const auto& b : blocks(g)) {
    res.mu += static_cast<long long>(b.size()) - 2;
    for (const auto& v : b) ++bldeg[v];
  }
  for (const auto& v : g.vertices()) res.mu += bldeg[v] - 1;
  return res;
}

inline bool attains_minimal_rank(const Graph& g, const Character& f) {
  long long d = image_on(f, g.vertex_set());
  for (const auto& v : cut_vertices(g))
    if (std::llabs(f.value(v)) != d) return false;
  return true;
}

struct UnboundedFamilyMember {
  long long n = 1;
  Character character;  // cut vertices -> n, other vertices -> 1
  long long rank = 0;
  long long closed_form = 0;  // 1 + sum_B(|V B|-2) + n sum_v(bldeg-1)
  bool closed_form_applies = false;
};

// Characters of unbounded kernel rank: f_n sends cut vertices to n and the
// remaining vertices to 1. The displayed closed form assumes I_{G,B} = 1 for
// every block, which can fail when a block of size >= 3 consists entirely of
// cut vertices; rank always reports the exact value.
inline UnboundedFamilyMember unbounded_family(const Graph& g, long long n) {
  require_connected(g, "unbounded_family");
  if (!is_block_graph(g))
    throw_precondition("not_block_graph", "unbounded_family requires a block graph");
  if (n < 1) throw_input("bad_parameter", "unbounded_family requires n >= 1");
  auto cuts = cut_vertices(g);
  if (cuts.empty())
    throw_precondition("no_cut_vertex", "unbounded_family requires at least one cut vertex");

  std::map<VertexId, long long> w;
  for (const auto& v : g.vertices()) w[v] = set_contains(cuts, v) ? n : 1;
  UnboundedFamilyMember out;
  out.n = n;
  out.character = Character::from_integers(w);
  auto rep = rank_formula(g, out.character);
  out.rank = rep.rank;
  out.closed_form = 1;
  std::map<VertexId, int> bldeg;
  for (const auto& v : g.vertices()) bldeg[v] = 0;
  for (const auto& b : blocks(g)) {
    out.closed_form += static_cast<long long>(b.size()) - 2;
    for (const auto& v : b) ++bldeg[v];
  }
  for (const auto& v : g.vertices()) out.closed_form += n * (bldeg[v] - 1);
  out.closed_form_applies = out.closed_form == out.rank;
  return out;
}

struct BoundedDivergenceFamily {
  struct Member {
    long long p = 0;
    Character character;
    long long rank = 0;
    // f_n / |p_n|: the ray representative whose entries converge to the limit
    std::map<VertexId, Rational> ray;
  };
  std::vector<Member> members;
  long long constant_rank = 0;
  Character limit;  // cut vertices -> 0, other vertices -> 1
  Classification limit_class;
};

// Family f_n = (cut -> q, others -> p_n) with p_n coprime to q: every member
// has the same kernel rank, while the normalized rays f_n / p_n converge
// entrywise to the wild character sending cut vertices to 0.
inline BoundedDivergenceFamily bounded_divergence_family(const Graph& g, long long q,
                                                         const std::vector<long long>& ps) {
  require_connected(g, "bounded_divergence_family");
  if (!is_block_graph(g))
    throw_precondition("not_block_graph", "bounded_divergence_family requires a block graph");
  auto cuts = cut_vertices(g);
  if (cuts.empty())
    throw_precondition("no_cut_vertex",
                       "bounded_divergence_family requires at least one cut vertex");
  if (q == 0) throw_input("bad_parameter", "q must be nonzero");
  if (ps.empty()) throw_input("bad_parameter", "at least one p value is required");
  for (const auto& b : blocks(g))
    if (set_difference(b, cuts).empty())
      throw_precondition("block_without_free_vertex",
                         "every block must contain a vertex that is not a cut vertex");
  for (long long p : ps) {
    if (p == 0) throw_input("bad_parameter", "p values must be nonzero");
    if (std::gcd(std::llabs(p), std::llabs(q)) != 1)
      throw_input("not_coprime",
                  "p = " + std::to_string(p) + " is not coprime to q = " + std::to_string(q));
  }

  BoundedDivergenceFamily out;
  for (long long p : ps) {
    std::map<VertexId, long long> w;
    for (const auto& v : g.vertices()) w[v] = set_contains(cuts, v) ? q : p;
    BoundedDivergenceFamily::Member member;
    member.p = p;
    member.character = Character::from_integers(w);
    member.rank = rank_formula(g, member.character).rank;
    for (const auto& v : g.vertices())
      member.ray.emplace(v, Rational(w[v], std::llabs(p)));
    out.members.push_back(std::move(member));
  }
  out.constant_rank = out.members.front().rank;
  for (const auto& member : out.members)
    require_internal(member.rank == out.constant_rank,
                     "bounded divergence family must have constant rank");

  std::map<VertexId, long long> w;
  for (const auto& v : g.vertices()) w[v] = set_contains(cuts, v) ? 0 : 1;
  out.limit = Character::from_integers(w);
  out.limit_class = classify(out.limit, g);
  require_internal(out.limit_class.kind == KernelClass::Wild,
                   "limit character of the family must be wild");
  return out;
}

struct NonchordalWitness {
  Character character;
  SplittingTriple splitting;
  bool gamma3_connected = false;
  VertexSet lambda;  // dead subgraph; a proper subgraph of gamma3
  Classification character_class;
  RestrictionClass gamma3_class = RestrictionClass::NonFgKernel;
};

namespace detail {

inline void sort_by_size_then_lex(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
}

}  // namespace detail

// A character on a non-chordal graph whose kernel is finitely generated while
// the exhibited splitting carries an edge group that is not: split along a
// non-complete minimal separator gamma3 and kill a subgraph lambda of it that
// disconnects or undominates gamma3. Any separating subset of the graph lying
// inside lambda would make the character wild, so lambda must contain no
// minimal separator; the killed piece is chosen as a connected component of
// gamma3 (or a minimal separator of gamma3 when it is connected) whenever one
// of those qualifies, with an empty lambda over a disconnected gamma3 and a
// general subset search as fallbacks.
inline NonchordalWitness nonchordal_witness(const Graph& g) {
  require_connected(g, "nonchordal_witness");
  if (is_chordal(g).chordal)
    throw_precondition("chordal_input", "nonchordal_witness requires a non-chordal graph");

  auto separators = minimal_vertex_separators(g);
  std::vector<VertexSet> noncomplete;
  for (const auto& s : separators)
    if (!is_clique(g, s)) noncomplete.push_back(s);
  require_internal(!noncomplete.empty(),
                   "a non-chordal graph has a non-complete minimal separator");
  detail::sort_by_size_then_lex(noncomplete);

  // some subset of lambda separates g iff some minimal separator sits inside
  auto separates_within = [&](const VertexSet& lambda) {
    for (const auto& t : separators)
      if (set_subset(t, lambda)) return true;
    return false;
  };

  VertexSet gamma3, lambda;
  bool found = false;
  auto try_candidate = [&](const VertexSet& s, const VertexSet& kill) {
    if (found || separates_within(kill)) return;
    Graph g3 = full_subgraph(g, s);
    std::map<VertexId, long long> w3;
    for (const auto& v : s) w3[v] = set_contains(kill, v) ? 0 : 1;
    if (classify_restriction(g3, Character::from_integers(w3)) != RestrictionClass::NonFgKernel)
      return;
    gamma3 = s;
    lambda = kill;
    found = true;
  };

  for (const auto& s : noncomplete) {
    Graph g3 = full_subgraph(g, s);
    if (!is_connected(g3)) {
      for (const auto& comp : connected_components(g3)) try_candidate(s, comp);
    } else {
      auto inner = minimal_vertex_separators(g3);
      detail::sort_by_size_then_lex(inner);
      for (const auto& sep : inner) try_candidate(s, sep);
    }
    if (found) break;
  }
  if (!found) {
    // all-ones character: over a disconnected separator the edge restriction
    // is already not finitely generated
    for (const auto& s : noncomplete) {
      if (!is_connected(full_subgraph(g, s))) try_candidate(s, {});
      if (found) break;
    }
  }
  if (!found && g.vertex_count() <= 12) {
    // Complete search. Any witness can be normalized to kill only a subset of
    // the separating subgraph it defeats, so enumerating (separating subgraph,
    // killed subset) pairs decides existence.
    int n = g.vertex_count();
    std::vector<VertexSet> separating_sets;
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
      VertexSet s;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) s.push_back(g.name(i));
      if (!is_clique(g, s) && is_separating(g, s)) separating_sets.push_back(std::move(s));
    }
    detail::sort_by_size_then_lex(separating_sets);
    for (const auto& s : separating_sets) {
      std::vector<VertexSet> subsets;
      for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << s.size()); ++mask) {
        VertexSet kill;
        for (std::size_t i = 0; i < s.size(); ++i)
          if (mask >> i & 1) kill.push_back(s[i]);
        subsets.push_back(std::move(kill));
      }
      detail::sort_by_size_then_lex(subsets);
      for (const auto& kill : subsets) try_candidate(s, kill);
      if (found) break;
    }
    if (!found)
      throw_precondition(
          "no_witness_exists",
          "no character on this graph has a finitely generated kernel together with a "
          "splitting whose edge kernel is not finitely generated (exhaustive search over "
          "separating subgraphs and killed subsets)");
  }
  if (!found)
    throw_precondition("witness_not_found",
                       "no witness character found among minimal-separator candidates");

  NonchordalWitness out;
  out.lambda = lambda;
  out.gamma3_connected = is_connected(full_subgraph(g, gamma3));
  std::map<VertexId, long long> w;
  for (const auto& v : g.vertices()) w[v] = set_contains(lambda, v) ? 0 : 1;
  out.character = Character::from_integers(w);

  auto comps = connected_components(complement_subgraph(g, gamma3));
  require_internal(comps.size() >= 2, "gamma3 must separate");
  VertexSet others;
  for (std::size_t i = 1; i < comps.size(); ++i) others = set_union(others, comps[i]);
  out.splitting = {set_union(gamma3, comps.front()), set_union(gamma3, others), gamma3};
  validate_splitting(g, out.splitting);

  out.character_class = classify(out.character, g);
  require_internal(out.character_class.kind == KernelClass::FinitelyGenerated,
                   "witness character must have a finitely generated kernel");
  out.gamma3_class =
      classify_restriction(full_subgraph(g, gamma3), out.character.restrict_to(gamma3));
  require_internal(out.gamma3_class == RestrictionClass::NonFgKernel,
                   "witness edge restriction must have a non-finitely-generated kernel");
  return out;
}

}  // namespace artkernel

#endif  // ARTKERNEL_BLOCKGRAPH_HPP
