#ifndef ARTKERNEL_GRAPH_HPP
#define ARTKERNEL_GRAPH_HPP

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "artkernel/errors.hpp"

namespace artkernel {

using VertexId = std::string;

// A subset of a graph's vertices, kept sorted and unique. Always read as the
// full (induced) subgraph it generates.
using VertexSet = std::vector<VertexId>;

inline VertexSet make_vertex_set(std::vector<VertexId> names) {
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

inline bool set_contains(const VertexSet& s, const VertexId& v) {
  return std::binary_search(s.begin(), s.end(), v);
}

inline bool set_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Finite simplicial graph: named vertices in canonical (sorted) order, no
// self-loops, no duplicate edges. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  Graph(std::vector<VertexId> vertices, const std::vector<std::pair<VertexId, VertexId>>& edges) {
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t i = 1; i < vertices.size(); ++i)
      if (vertices[i] == vertices[i - 1])
        throw_input("duplicate_vertex", "duplicate vertex '" + vertices[i] + "'");
    names_ = std::move(vertices);
    int n = static_cast<int>(names_.size());
    matrix_.assign(n, std::vector<bool>(n, false));
    adj_.assign(n, {});
    for (const auto& [u, v] : edges) {
      int a = index_of(u);
      int b = index_of(v);
      if (a == b) throw_input("self_loop", "self-loop at vertex '" + u + "'");
      if (matrix_[a][b]) throw_input("duplicate_edge", "duplicate edge {" + u + "," + v + "}");
      matrix_[a][b] = matrix_[b][a] = true;
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (matrix_[i][j]) adj_[i].push_back(j);
    edge_count_ = 0;
    for (int i = 0; i < n; ++i) edge_count_ += static_cast<int>(adj_[i].size());
    edge_count_ /= 2;
  }

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return edge_count_; }
  const std::vector<VertexId>& vertices() const { return names_; }
  const VertexId& name(int i) const { return names_[static_cast<std::size_t>(i)]; }

  bool has_vertex(const VertexId& v) const {
    return std::binary_search(names_.begin(), names_.end(), v);
  }

  int index_of(const VertexId& v) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), v);
    if (it == names_.end() || *it != v)
      throw_input("unknown_vertex", "unknown vertex '" + v + "'");
    return static_cast<int>(it - names_.begin());
  }

  bool adjacent(int a, int b) const { return matrix_[a][b]; }
  bool adjacent(const VertexId& u, const VertexId& v) const {
    return matrix_[index_of(u)][index_of(v)];
  }
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

  std::vector<std::pair<VertexId, VertexId>> edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (int i = 0; i < vertex_count(); ++i)
      for (int j : adj_[i])
        if (i < j) out.emplace_back(names_[i], names_[j]);
    return out;
  }

  VertexSet vertex_set() const { return names_; }

  // Validates that every member of s names a vertex; returns sorted indices.
  std::vector<int> indices_of(const VertexSet& s) const {
    std::vector<int> idx;
    idx.reserve(s.size());
    for (const auto& v : s) idx.push_back(index_of(v));
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    return idx;
  }

  VertexSet names_of(const std::vector<int>& idx) const {
    VertexSet out;
    out.reserve(idx.size());
    for (int i : idx) out.push_back(names_[static_cast<std::size_t>(i)]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<VertexId> names_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<bool>> matrix_;
  int edge_count_ = 0;
};

namespace detail {

// Connected component labels restricted to the index set `keep` (-1 outside).
inline std::vector<int> component_labels(const Graph& g, const std::vector<bool>& keep,
                                         int* component_count = nullptr) {
  int n = g.vertex_count();
  std::vector<int> label(n, -1);
  int comps = 0;
  for (int s = 0; s < n; ++s) {
    if (!keep[s] || label[s] != -1) continue;
    label[s] = comps;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(v))
        if (keep[w] && label[w] == -1) {
          label[w] = comps;
          queue.push_back(w);
        }
    }
    ++comps;
  }
  if (component_count) *component_count = comps;
  return label;
}

inline std::vector<bool> keep_all(const Graph& g) {
  return std::vector<bool>(static_cast<std::size_t>(g.vertex_count()), true);
}

inline std::vector<bool> keep_of(const Graph& g, const std::vector<int>& idx) {
  std::vector<bool> keep(static_cast<std::size_t>(g.vertex_count()), false);
  for (int i : idx) keep[static_cast<std::size_t>(i)] = true;
  return keep;
}

}  // namespace detail

inline bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return false;
  int comps = 0;
  detail::component_labels(g, detail::keep_all(g), &comps);
  return comps == 1;
}

inline std::vector<VertexSet> connected_components(const Graph& g) {
  int comps = 0;
  auto label = detail::component_labels(g, detail::keep_all(g), &comps);
  std::vector<VertexSet> out(static_cast<std::size_t>(comps));
  for (int v = 0; v < g.vertex_count(); ++v)
    out[static_cast<std::size_t>(label[v])].push_back(g.name(v));
  std::sort(out.begin(), out.end());
  return out;
}

inline void require_connected(const Graph& g, const std::string& op) {
  if (!is_connected(g))
    throw_precondition("disconnected", op + " requires a connected graph");
}

// Induced graph on s.
inline Graph full_subgraph(const Graph& g, const VertexSet& s) {
  auto idx = g.indices_of(s);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j)
      if (g.adjacent(idx[i], idx[j])) edges.emplace_back(g.name(idx[i]), g.name(idx[j]));
  return Graph(g.names_of(idx), edges);
}

// Induced graph on V(g) \ s.
inline Graph complement_subgraph(const Graph& g, const VertexSet& s) {
  auto idx = g.indices_of(s);  // validates membership
  (void)idx;
  return full_subgraph(g, set_difference(g.vertex_set(), s));
}

// True iff removing s disconnects g. Requires g connected and s a proper
// nonempty subset of the vertices.
inline bool is_separating(const Graph& g, const VertexSet& s) {
  require_connected(g, "is_separating");
  if (s.empty()) throw_input("empty_subset", "is_separating requires a nonempty subset");
  auto idx = g.indices_of(s);
  if (static_cast<int>(idx.size()) == g.vertex_count())
    throw_input("full_subset", "is_separating requires a proper subset");
  auto keep = detail::keep_all(g);
  for (int i : idx) keep[static_cast<std::size_t>(i)] = false;
  int comps = 0;
  detail::component_labels(g, keep, &comps);
  return comps >= 2;
}

// Articulation points via the standard lowpoint DFS.
inline VertexSet cut_vertices(const Graph& g) {
  require_connected(g, "cut_vertices");
  int n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<bool> is_cut(n, false);
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int u, int parent) {
    disc[u] = low[u] = timer++;
    int children = 0;
    for (int w : g.neighbors(u)) {
      if (disc[w] == -1) {
        ++children;
        dfs(w, u);
        low[u] = std::min(low[u], low[w]);
        if (parent != -1 && low[w] >= disc[u]) is_cut[u] = true;
      } else if (w != parent) {
        low[u] = std::min(low[u], disc[w]);
      }
    }
    if (parent == -1 && children > 1) is_cut[u] = true;
  };
  if (n > 0) dfs(0, -1);
  VertexSet out;
  for (int v = 0; v < n; ++v)
    if (is_cut[v]) out.push_back(g.name(v));
  return out;
}

// Biconnected components as vertex sets, canonical order. The blocks cover
// all vertices and partition the edges; two blocks share at most one vertex.
inline std::vector<VertexSet> blocks(const Graph& g) {
  require_connected(g, "blocks");
  int n = g.vertex_count();
  if (n == 1) return {{g.name(0)}};
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::pair<int, int>> stack;
  std::vector<VertexSet> out;
  int timer = 0;
  auto pop_block = [&](std::pair<int, int> top_edge) {
    std::set<int> members;
    while (true) {
      auto e = stack.back();
      stack.pop_back();
      members.insert(e.first);
      members.insert(e.second);
      if (e == top_edge) break;
    }
    VertexSet block;
    for (int v : members) block.push_back(g.name(v));
    std::sort(block.begin(), block.end());
    out.push_back(std::move(block));
  };
  std::function<void(int, int)> dfs = [&](int u, int parent) {
    disc[u] = low[u] = timer++;
    for (int w : g.neighbors(u)) {
      if (disc[w] == -1) {
        stack.emplace_back(u, w);
        dfs(w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) pop_block({u, w});
      } else if (w != parent && disc[w] < disc[u]) {
        stack.emplace_back(u, w);
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };
  dfs(0, -1);
  std::sort(out.begin(), out.end());
  return out;
}

// Number of blocks containing v; 1 iff v is not a cut vertex.
inline int block_degree(const Graph& g, const VertexId& v) {
  g.index_of(v);
  int count = 0;
  for (const auto& b : blocks(g))
    if (set_contains(b, v)) ++count;
  return count;
}

inline bool is_complete(const Graph& g) {
  int n = g.vertex_count();
  return g.edge_count() == n * (n - 1) / 2;
}

inline bool is_clique(const Graph& g, const VertexSet& s) {
  auto idx = g.indices_of(s);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j)
      if (!g.adjacent(idx[i], idx[j])) return false;
  return true;
}

struct ChordalityResult {
  bool chordal = false;
  // Perfect elimination ordering when chordal (certificate).
  std::vector<VertexId> elimination_order;
  // Chordless cycle of length >= 4 when not chordal (counterexample).
  std::vector<VertexId> chordless_cycle;
};

namespace detail {

// Looks for a chordless cycle through v,u,...,w,v where u,w are nonadjacent
// neighbors of v: a shortest u-w path in g minus (N[v] \ {u,w}) closes up to
// a chordless cycle. Scans in canonical order so the witness is stable.
inline std::vector<VertexId> find_chordless_cycle(const Graph& g) {
  int n = g.vertex_count();
  for (int v = 0; v < n; ++v) {
    const auto& nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        int u = nb[i], w = nb[j];
        if (g.adjacent(u, w)) continue;
        std::vector<bool> keep(static_cast<std::size_t>(n), true);
        keep[static_cast<std::size_t>(v)] = false;
        for (int x : nb)
          if (x != u && x != w) keep[static_cast<std::size_t>(x)] = false;
        std::vector<int> prev(static_cast<std::size_t>(n), -2);
        std::deque<int> queue{u};
        prev[static_cast<std::size_t>(u)] = -1;
        while (!queue.empty()) {
          int x = queue.front();
          queue.pop_front();
          if (x == w) break;
          for (int y : g.neighbors(x))
            if (keep[static_cast<std::size_t>(y)] && prev[static_cast<std::size_t>(y)] == -2) {
              prev[static_cast<std::size_t>(y)] = x;
              queue.push_back(y);
            }
        }
        if (prev[static_cast<std::size_t>(w)] == -2) continue;
        std::vector<VertexId> cycle{g.name(v)};
        std::vector<int> path;
        for (int x = w; x != -1; x = prev[static_cast<std::size_t>(x)]) path.push_back(x);
        std::reverse(path.begin(), path.end());  // u ... w
        for (int x : path) cycle.push_back(g.name(x));
        return cycle;
      }
    }
  }
  return {};
}

}  // namespace detail

// Maximum cardinality search. Produces a perfect elimination ordering iff the
// graph is chordal; otherwise a chordless cycle of length >= 4 is returned.
inline ChordalityResult is_chordal(const Graph& g) {
  ChordalityResult res;
  int n = g.vertex_count();
  if (n == 0) {
    res.chordal = true;
    return res;
  }
  std::vector<int> weight(n, 0), order;
  std::vector<bool> taken(n, false);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!taken[v] && (best == -1 || weight[v] > weight[best])) best = v;
    taken[best] = true;
    order.push_back(best);
    for (int w : g.neighbors(best))
      if (!taken[w]) ++weight[w];
  }
  // MCS emits a reverse elimination order: eliminate in reverse.
  std::vector<int> elim(order.rbegin(), order.rend());
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[elim[static_cast<std::size_t>(i)]] = i;
  bool ok = true;
  for (int i = 0; i < n && ok; ++i) {
    int v = elim[static_cast<std::size_t>(i)];
    // later neighbors of v must form a clique; it suffices to check the
    // earliest of them against the rest
    int first = -1;
    for (int w : g.neighbors(v))
      if (pos[w] > i && (first == -1 || pos[w] < pos[first])) first = w;
    if (first == -1) continue;
    for (int w : g.neighbors(v))
      if (pos[w] > pos[first] && !g.adjacent(first, w)) {
        ok = false;
        break;
      }
  }
  if (ok) {
    res.chordal = true;
    for (int v : elim) res.elimination_order.push_back(g.name(v));
  } else {
    res.chordal = false;
    res.chordless_cycle = detail::find_chordless_cycle(g);
    require_internal(res.chordless_cycle.size() >= 4,
                     "non-chordal graph must contain a chordless cycle");
  }
  return res;
}

// All minimal vertex separators, by close-neighborhood generation: seed with
// N(C) for components C of G - N[v], then expand each separator S by the
// components of G - (S u N[x]) for x in S, until closure.
inline std::vector<VertexSet> minimal_vertex_separators(const Graph& g) {
  require_connected(g, "minimal_vertex_separators");
  int n = g.vertex_count();
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;

  auto neighborhood_separators = [&](const std::vector<bool>& removed) {
    std::vector<std::vector<int>> result;
    auto keep = detail::keep_all(g);
    for (int i = 0; i < n; ++i)
      if (removed[static_cast<std::size_t>(i)]) keep[static_cast<std::size_t>(i)] = false;
    int comps = 0;
    auto label = detail::component_labels(g, keep, &comps);
    for (int c = 0; c < comps; ++c) {
      std::set<int> sep;
      for (int v = 0; v < n; ++v) {
        if (label[v] != c) continue;
        for (int w : g.neighbors(v))
          if (label[w] == -1) sep.insert(w);
      }
      if (!sep.empty()) result.emplace_back(sep.begin(), sep.end());
    }
    return result;
  };

  auto push = [&](const std::vector<int>& s) {
    if (seen.insert(s).second) queue.push_back(s);
  };

  for (int v = 0; v < n; ++v) {
    std::vector<bool> removed(static_cast<std::size_t>(n), false);
    removed[static_cast<std::size_t>(v)] = true;
    for (int w : g.neighbors(v)) removed[static_cast<std::size_t>(w)] = true;
    for (const auto& s : neighborhood_separators(removed)) push(s);
  }
  while (!queue.empty()) {
    auto s = queue.front();
    queue.pop_front();
    for (int x : s) {
      std::vector<bool> removed(static_cast<std::size_t>(n), false);
      for (int y : s) removed[static_cast<std::size_t>(y)] = true;
      removed[static_cast<std::size_t>(x)] = true;
      for (int w : g.neighbors(x)) removed[static_cast<std::size_t>(w)] = true;
      for (const auto& t : neighborhood_separators(removed)) push(t);
    }
  }
  std::vector<VertexSet> out;
  out.reserve(seen.size());
  for (const auto& s : seen) out.push_back(g.names_of(s));
  std::sort(out.begin(), out.end());
  return out;
}

// All maximal cliques (Bron-Kerbosch with pivoting), canonical order.
inline std::vector<VertexSet> maximal_cliques(const Graph& g) {
  int n = g.vertex_count();
  std::vector<VertexSet> out;
  std::vector<int> r;
  std::function<void(std::vector<int>, std::vector<int>)> expand =
      [&](std::vector<int> p, std::vector<int> x) {
        if (p.empty() && x.empty()) {
          out.push_back(g.names_of(r));
          return;
        }
        // pivot: vertex of p u x with most neighbors in p
        int pivot = -1, best = -1;
        for (int cand : p) {
          int deg = 0;
          for (int v : p)
            if (g.adjacent(cand, v)) ++deg;
          if (deg > best) best = deg, pivot = cand;
        }
        for (int cand : x) {
          int deg = 0;
          for (int v : p)
            if (g.adjacent(cand, v)) ++deg;
          if (deg > best) best = deg, pivot = cand;
        }
        std::vector<int> candidates;
        for (int v : p)
          if (pivot == -1 || !g.adjacent(pivot, v)) candidates.push_back(v);
        for (int v : candidates) {
          std::vector<int> p2, x2;
          for (int w : p)
            if (g.adjacent(v, w)) p2.push_back(w);
          for (int w : x)
            if (g.adjacent(v, w)) x2.push_back(w);
          r.push_back(v);
          expand(p2, x2);
          r.pop_back();
          p.erase(std::find(p.begin(), p.end(), v));
          x.push_back(v);
        }
      };
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  if (n > 0) expand(p, {});
  std::sort(out.begin(), out.end());
  return out;
}

struct SplitsOverAbelian {
  bool value = false;
  // one of "disconnected", "complete", "separating_clique", "none"
  std::string reason = "none";
  VertexSet clique;  // witness when reason == "separating_clique"
};

// A separating clique exists iff some minimal vertex separator is a clique.
inline SplitsOverAbelian splits_over_abelian(const Graph& g) {
  SplitsOverAbelian res;
  if (g.vertex_count() == 0) {
    res.value = true;
    res.reason = "complete";
    return res;
  }
  if (!is_connected(g)) {
    res.value = true;
    res.reason = "disconnected";
    return res;
  }
  if (is_complete(g)) {
    res.value = true;
    res.reason = "complete";
    return res;
  }
  for (const auto& s : minimal_vertex_separators(g)) {
    if (is_clique(g, s)) {
      res.value = true;
      res.reason = "separating_clique";
      res.clique = s;
      return res;
    }
  }
  return res;
}

inline bool is_block_graph(const Graph& g) {
  require_connected(g, "is_block_graph");
  for (const auto& b : blocks(g))
    if (!is_clique(g, b)) return false;
  return true;
}

}  // namespace artkernel

#endif  // ARTKERNEL_GRAPH_HPP
