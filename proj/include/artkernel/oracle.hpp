#ifndef ARTKERNEL_ORACLE_HPP
#define ARTKERNEL_ORACLE_HPP

#include <cstdint>
#include <cstdlib>
#include <set>
#include <vector>

#include "artkernel/character.hpp"
#include "artkernel/errors.hpp"
#include "artkernel/graph.hpp"

// Brute-force reference computations over small graphs. Everything here works
// by exhaustive enumeration straight from the definitions and stays
// independent of the production algorithms it is used to check.
namespace artkernel::oracle {

namespace detail {

struct MaskGraph {
  int n = 0;
  std::vector<std::uint64_t> adj;  // adj[v] = neighbor mask
};

inline MaskGraph to_mask(const Graph& g) {
  if (g.vertex_count() > 20)
    throw_precondition("too_large", "exhaustive oracles are capped at 20 vertices");
  MaskGraph m;
  m.n = g.vertex_count();
  m.adj.assign(static_cast<std::size_t>(m.n), 0);
  for (int v = 0; v < m.n; ++v)
    for (int w : g.neighbors(v)) m.adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << w;
  return m;
}

inline bool mask_connected(const MaskGraph& g, std::uint64_t keep) {
  if (keep == 0) return false;
  std::uint64_t start = keep & (~keep + 1);
  std::uint64_t seen = start, frontier = start;
  while (frontier) {
    std::uint64_t next = 0;
    for (int v = 0; v < g.n; ++v)
      if (frontier >> v & 1) next |= g.adj[static_cast<std::size_t>(v)] & keep;
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == keep;
}

// component masks of the induced subgraph on `keep`
inline std::vector<std::uint64_t> mask_components(const MaskGraph& g, std::uint64_t keep) {
  std::vector<std::uint64_t> out;
  std::uint64_t rest = keep;
  while (rest) {
    std::uint64_t start = rest & (~rest + 1);
    std::uint64_t seen = start, frontier = start;
    while (frontier) {
      std::uint64_t next = 0;
      for (int v = 0; v < g.n; ++v)
        if (frontier >> v & 1) next |= g.adj[static_cast<std::size_t>(v)] & keep;
      frontier = next & ~seen;
      seen |= next;
    }
    out.push_back(seen);
    rest &= ~seen;
  }
  return out;
}

inline std::uint64_t neighborhood(const MaskGraph& g, std::uint64_t s) {
  std::uint64_t nb = 0;
  for (int v = 0; v < g.n; ++v)
    if (s >> v & 1) nb |= g.adj[static_cast<std::size_t>(v)];
  return nb & ~s;
}

inline bool mask_clique(const MaskGraph& g, std::uint64_t s) {
  for (int v = 0; v < g.n; ++v)
    if (s >> v & 1)
      if ((s & ~(std::uint64_t{1} << v) & ~g.adj[static_cast<std::size_t>(v)]) != 0) return false;
  return true;
}

inline VertexSet mask_names(const Graph& g, std::uint64_t s) {
  VertexSet out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (s >> v & 1) out.push_back(g.name(v));
  return out;
}

}  // namespace detail

// S is a minimal vertex separator iff at least two components C of G - S see
// all of S (N(C) = S). Enumerates every vertex subset.
inline std::vector<VertexSet> minimal_separators_exhaustive(const Graph& g) {
  auto m = detail::to_mask(g);
  std::uint64_t all = m.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m.n) - 1;
  std::vector<VertexSet> out;
  for (std::uint64_t s = 1; s < all; ++s) {
    int full = 0;
    for (std::uint64_t c : detail::mask_components(m, all & ~s))
      if (detail::neighborhood(m, c) == s) ++full;
    if (full >= 2) out.push_back(detail::mask_names(g, s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Dirac: chordal iff every minimal vertex separator induces a clique.
inline bool chordal_by_dirac(const Graph& g) {
  auto m = detail::to_mask(g);
  std::uint64_t all = m.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m.n) - 1;
  for (std::uint64_t s = 1; s < all; ++s) {
    if (detail::mask_clique(m, s)) continue;
    int full = 0;
    for (std::uint64_t c : detail::mask_components(m, all & ~s))
      if (detail::neighborhood(m, c) == s) ++full;
    if (full >= 2) return false;
  }
  return true;
}

// Maximal subsets that induce a connected graph without cut vertices.
inline std::vector<VertexSet> blocks_exhaustive(const Graph& g) {
  auto m = detail::to_mask(g);
  std::uint64_t all = m.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m.n) - 1;
  std::vector<std::uint64_t> biconnected;
  for (std::uint64_t s = 1; s <= all; ++s) {
    if (!detail::mask_connected(m, s)) continue;
    int size = __builtin_popcountll(s);
    bool ok = true;
    if (size >= 3) {
      for (int v = 0; v < m.n && ok; ++v)
        if (s >> v & 1)
          if (!detail::mask_connected(m, s & ~(std::uint64_t{1} << v))) ok = false;
    }
    if (ok) biconnected.push_back(s);
  }
  std::vector<VertexSet> out;
  for (std::uint64_t s : biconnected) {
    bool maximal = true;
    for (std::uint64_t t : biconnected)
      if (t != s && (s & ~t) == 0) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(detail::mask_names(g, s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<VertexSet> maximal_cliques_exhaustive(const Graph& g) {
  auto m = detail::to_mask(g);
  std::uint64_t all = m.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m.n) - 1;
  std::vector<std::uint64_t> cliques;
  for (std::uint64_t s = 1; s <= all; ++s)
    if (detail::mask_clique(m, s)) cliques.push_back(s);
  std::vector<VertexSet> out;
  for (std::uint64_t s : cliques) {
    bool maximal = true;
    for (std::uint64_t t : cliques)
      if (t != s && (s & ~t) == 0) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(detail::mask_names(g, s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Cut vertices straight from the definition: v separates iff G - v is
// disconnected.
inline VertexSet cut_vertices_by_definition(const Graph& g) {
  auto m = detail::to_mask(g);
  std::uint64_t all = m.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m.n) - 1;
  VertexSet out;
  if (m.n <= 2) return out;
  for (int v = 0; v < m.n; ++v)
    if (!detail::mask_connected(m, all & ~(std::uint64_t{1} << v))) out.push_back(g.name(v));
  return out;
}

// True iff some nonempty subset of `within` separates g.
inline bool has_separating_subset(const Graph& g, const VertexSet& within) {
  auto m = detail::to_mask(g);
  std::uint64_t all = m.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m.n) - 1;
  std::uint64_t pool = 0;
  for (const auto& v : within) pool |= std::uint64_t{1} << g.index_of(v);
  // iterate over nonempty submasks of pool
  for (std::uint64_t s = pool; s != 0; s = (s - 1) & pool) {
    if (s != all && !detail::mask_connected(m, all & ~s)) return true;
    if (s == 0) break;
  }
  return false;
}

struct OrbitCount {
  long long classes = 0;
  bool stabilized = false;
};

// Number of residues modulo `modulus` reached by f over group words of
// bounded length: signed sums of at most max_len vertex weights. Stabilized
// means one more letter adds no new residue, i.e. the full coset count is
// already visible.
inline OrbitCount orbit_residues(const std::vector<long long>& values, long long modulus,
                                 int max_len) {
  require_internal(modulus > 0, "orbit_residues needs a positive modulus");
  auto reduce = [&](long long x) { return ((x % modulus) + modulus) % modulus; };
  std::set<long long> current{0};
  std::set<long long> previous;
  for (int len = 1; len <= max_len + 1; ++len) {
    previous = current;
    std::set<long long> next = current;
    for (long long base : current)
      for (long long v : values) {
        next.insert(reduce(base + v));
        next.insert(reduce(base - v));
      }
    current = std::move(next);
    if (len == max_len + 1) {
      OrbitCount out;
      out.classes = static_cast<long long>(previous.size());
      out.stabilized = previous == current;
      return out;
    }
  }
  return {};
}

}  // namespace artkernel::oracle

#endif  // ARTKERNEL_ORACLE_HPP
