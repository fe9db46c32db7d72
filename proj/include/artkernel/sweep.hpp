#ifndef ARTKERNEL_SWEEP_HPP
#define ARTKERNEL_SWEEP_HPP

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "artkernel/blockgraph.hpp"
#include "artkernel/character.hpp"
#include "artkernel/chordal.hpp"
#include "artkernel/graph.hpp"
#include "artkernel/io.hpp"
#include "artkernel/oracle.hpp"
#include "artkernel/splitting.hpp"

// Randomized and exhaustive invariant sweeps. Each sweep pits a production
// code path against an oracle from artkernel::oracle (or a second algebraic
// route) over generated instances and counts mismatches.
namespace artkernel::sweep {

using Rng = std::mt19937_64;

constexpr unsigned long long kDefaultSeed = 1729;

struct SweepResult {
  std::string name;
  long long checked = 0;
  long long mismatches = 0;
  // instances where the object a claim promises provably does not exist
  // (counterexamples to the claim rather than implementation faults)
  long long missing = 0;
  std::string note;

  bool pass() const { return mismatches == 0 && checked > 0; }
};

// ---- generators -------------------------------------------------------------

inline std::vector<VertexId> letter_names(int n) {
  std::vector<VertexId> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return names;
}

inline Graph random_connected_graph(Rng& rng, int n, double p = 0.45) {
  auto names = letter_names(n);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng) < p) edges.emplace_back(names[i], names[j]);
    Graph g(names, edges);
    if (is_connected(g)) return g;
  }
  throw_internal("generator", "failed to sample a connected graph");
}

inline Graph random_tree(Rng& rng, int n) {
  auto names = letter_names(n);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    edges.emplace_back(names[pick(rng)], names[i]);
  }
  return Graph(names, edges);
}

// Grows a block graph by gluing random cliques onto random existing vertices.
inline Graph random_block_graph(Rng& rng, int max_n) {
  std::uniform_int_distribution<int> target_dist(2, std::max(2, max_n));
  int target = target_dist(rng);
  std::uniform_int_distribution<int> first_size(1, std::min(4, target));
  int count = first_size(rng);
  auto names = letter_names(target);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j) edges.emplace_back(names[i], names[j]);
  while (count < target) {
    std::uniform_int_distribution<int> anchor_dist(0, count - 1);
    int anchor = anchor_dist(rng);
    std::uniform_int_distribution<int> extra_dist(1, std::min(3, target - count));
    int extra = extra_dist(rng);
    std::vector<int> block{anchor};
    for (int i = 0; i < extra; ++i) block.push_back(count + i);
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = i + 1; j < block.size(); ++j)
        edges.emplace_back(names[block[i]], names[block[j]]);
    count += extra;
  }
  std::vector<VertexId> used(names.begin(), names.begin() + count);
  return Graph(used, edges);
}

// Integer character with entries in [lo, hi], nonzero on `forced` and not
// identically zero.
inline Character random_character(Rng& rng, const Graph& g, long long lo, long long hi,
                                  const VertexSet& forced = {}) {
  std::uniform_int_distribution<long long> dist(lo, hi);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::map<VertexId, long long> w;
    bool any = false;
    for (const auto& v : g.vertices()) {
      long long x = dist(rng);
      if (set_contains(forced, v))
        while (x == 0) x = dist(rng);
      w[v] = x;
      any = any || x != 0;
    }
    if (!any) continue;
    return Character::from_integers(w);
  }
  throw_internal("generator", "failed to sample a nonzero character");
}

// Splitting along a random minimal separator: gamma1 is the separator plus
// one complement component, gamma2 the separator plus the rest.
inline SplittingTriple random_splitting(Rng& rng, const Graph& g) {
  auto seps = minimal_vertex_separators(g);
  require_internal(!seps.empty(), "random_splitting needs a non-complete graph");
  std::uniform_int_distribution<std::size_t> pick(0, seps.size() - 1);
  const auto& s = seps[pick(rng)];
  auto comps = connected_components(complement_subgraph(g, s));
  std::uniform_int_distribution<std::size_t> cpick(0, comps.size() - 1);
  std::size_t first = cpick(rng);
  VertexSet others;
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (i != first) others = set_union(others, comps[i]);
  return {set_union(s, comps[first]), set_union(s, others), s};
}

// All labeled connected graphs on the first n letters (n <= 5 in practice).
inline std::vector<Graph> all_connected_graphs(int n) {
  auto names = letter_names(n);
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (mask >> k & 1) edges.emplace_back(names[slots[k].first], names[slots[k].second]);
    Graph g(names, edges);
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

// ---- certificate checks (definitional, used inside sweeps) ------------------

inline bool valid_elimination_order(const Graph& g, const std::vector<VertexId>& order) {
  if (static_cast<int>(order.size()) != g.vertex_count()) return false;
  std::map<VertexId, int> pos;
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  for (const auto& v : order) {
    VertexSet later;
    for (int w : g.neighbors(g.index_of(v)))
      if (pos.at(g.name(w)) > pos.at(v)) later.push_back(g.name(w));
    std::sort(later.begin(), later.end());
    if (!is_clique(g, later)) return false;
  }
  return true;
}

inline bool valid_chordless_cycle(const Graph& g, const std::vector<VertexId>& cycle) {
  std::size_t k = cycle.size();
  if (k < 4) return false;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
    }
  return true;
}

// ---- sweeps ------------------------------------------------------------------

// Chordality (maximum cardinality search + certificates) against the Dirac
// characterization with exhaustive separator enumeration.
inline SweepResult sweep_dirac(long long samples, int max_n = 8,
                               unsigned long long seed = kDefaultSeed) {
  SweepResult res;
  res.name = "dirac_agreement";
  Rng rng(seed);
  auto check = [&](const Graph& g) {
    ++res.checked;
    auto got = is_chordal(g);
    bool want = oracle::chordal_by_dirac(g);
    bool ok = got.chordal == want;
    if (got.chordal)
      ok = ok && valid_elimination_order(g, got.elimination_order);
    else
      ok = ok && valid_chordless_cycle(g, got.chordless_cycle);
    if (!ok) ++res.mismatches;
  };
  for (int n = 1; n <= std::min(5, max_n); ++n)
    for (const auto& g : all_connected_graphs(n)) check(g);
  std::uniform_int_distribution<int> size_dist(std::min(6, max_n), max_n);
  while (res.checked < samples) check(random_connected_graph(rng, size_dist(rng)));
  return res;
}

// Wild/fg trichotomy: the living-subgraph criterion against exhaustive
// enumeration of separating subsets of the dead subgraph.
inline SweepResult sweep_trichotomy(long long samples, int max_n = 7,
                                    unsigned long long seed = kDefaultSeed) {
  SweepResult res;
  res.name = "wild_trichotomy";
  Rng rng(seed);
  std::uniform_int_distribution<int> size_dist(2, max_n);
  while (res.checked < samples) {
    Graph g = random_connected_graph(rng, size_dist(rng));
    Character f = random_character(rng, g, -2, 2);
    ++res.checked;
    bool fg = kernel_is_fg(f, g);
    bool has_dead_separator = oracle::has_separating_subset(g, dead_subgraph(f, g));
    if (fg != !has_dead_separator) {
      ++res.mismatches;
      continue;
    }
    auto cls = classify(f, g);  // also exercises witness soundness asserts
    if ((cls.kind == KernelClass::Wild) != has_dead_separator) ++res.mismatches;
  }
  return res;
}

// Rank of block-graph kernels along three routes: the closed formula, the
// block-peeling recursion and the flattened clique decomposition. The
// per-step bookkeeping identities of the recursion are tallied separately
// when a second result is supplied, and folded in otherwise.
inline SweepResult sweep_rank_identity(long long samples, int max_n = 10,
                                       unsigned long long seed = kDefaultSeed,
                                       std::vector<SweepRow>* csv = nullptr,
                                       SweepResult* bookkeeping = nullptr) {
  SweepResult res;
  res.name = "rank_identity";
  SweepResult books;
  books.name = "recursion_bookkeeping";
  Rng rng(seed);
  while (res.checked < samples) {
    Graph g = random_block_graph(rng, max_n);
    Character f = random_character(rng, g, -3, 3, cut_vertices(g));
    ++res.checked;
    bool ok = true;

    auto formula = rank_formula(g, f);
    auto split = split_blocks(g, f);
    auto resolved = resolve_clique_kernels(g, split.descriptor);
    auto recursion_rank = resolved.rank_if_known();
    ok = ok && recursion_rank && *recursion_rank == formula.rank;

    auto chordal = chordal_dichotomy(g, f);
    ok = ok && chordal.tame();
    if (ok && chordal.tame()) {
      auto flat_rank = free_product_form(*chordal.gog).rank_if_known();
      ok = ok && flat_rank && *flat_rank == formula.rank;
    }

    // recursion bookkeeping: b1 + I_{piece,rest} m(rest) = m(piece), and
    // index multiplicativity through every surviving block
    bool books_ok = true;
    for (const auto& step : split.steps) {
      ++books.checked;
      books_ok = books_ok && step.b1 + step.index_rest * step.m_rest == step.m_piece;
      long long d_piece = image_on(f, step.piece);
      long long d_rest = image_on(f, step.rest);
      books_ok = books_ok && d_rest % d_piece == 0;
      for (const auto& b : blocks(full_subgraph(g, step.rest))) {
        long long db = image_on(f, b);
        books_ok = books_ok && db % d_rest == 0 &&
                   (d_rest / d_piece) * (db / d_rest) == db / d_piece;
      }
      if (!books_ok) break;
    }
    if (!books_ok) ++books.mismatches;
    if (split.steps.empty()) ++books.checked;  // single-block instances count

    if (!ok) ++res.mismatches;
    if (csv)
      csv->push_back({"bg" + std::to_string(res.checked), character_compact(f), formula.m,
                      formula.rank, "fg"});
  }
  if (bookkeeping)
    *bookkeeping = books;
  else
    res.mismatches += books.mismatches;
  return res;
}

// Trees with the all-ones character: kernel rank equals the edge count.
inline SweepResult sweep_tree_rank(long long count, int max_n = 12,
                                   unsigned long long seed = kDefaultSeed) {
  SweepResult res;
  res.name = "tree_rank";
  Rng rng(seed);
  std::uniform_int_distribution<int> size_dist(2, max_n);
  while (res.checked < count) {
    Graph g = random_tree(rng, size_dist(rng));
    std::map<VertexId, long long> w;
    for (const auto& v : g.vertices()) w[v] = 1;
    Character f = Character::from_integers(w);
    ++res.checked;
    if (rank_formula(g, f).rank != g.edge_count()) ++res.mismatches;
  }
  return res;
}

// Orbit counts: residues of f over short group words must reach exactly the
// index of each piece, and the Betti number must match the index count.
inline SweepResult sweep_orbit_count(long long count, unsigned long long seed = kDefaultSeed) {
  SweepResult res;
  res.name = "orbit_count";
  Rng rng(seed);
  std::uniform_int_distribution<int> size_dist(3, 6);
  int attempts = 0;
  while (res.checked < count && attempts < 200000) {
    ++attempts;
    Graph g = random_connected_graph(rng, size_dist(rng));
    if (is_complete(g)) continue;
    SplittingTriple split = random_splitting(rng, g);
    Character f = random_character(rng, g, -2, 2);
    if (image_on(f, split.gamma3) == 0) continue;

    std::vector<long long> values;
    for (const auto& [v, w] : f.weights()) values.push_back(w);
    std::vector<std::pair<VertexSet, long long>> pieces = {
        {split.gamma1, 0}, {split.gamma2, 0}, {split.gamma3, 0}};
    bool usable = true;
    std::vector<long long> counts;
    for (auto& [piece, unused] : pieces) {
      auto orbit = oracle::orbit_residues(values, image_on(f, piece), 6);
      if (!orbit.stabilized) {
        usable = false;
        break;
      }
      counts.push_back(orbit.classes);
    }
    if (!usable) continue;

    ++res.checked;
    auto report = decompose_once(g, f, split);
    bool ok = report.finite();
    if (ok) {
      long long i1 = report.index1.value, i2 = report.index2.value, i3 = report.index3.value;
      ok = counts[0] == i1 && counts[1] == i2 && counts[2] == i3;
      ok = ok && betti_number(*report.gog) == i3 - i1 - i2 + 1;
    }
    if (!ok) ++res.mismatches;
  }
  return res;
}

// Witness generator over non-chordal graphs: the produced character must be
// finitely generated while the exhibited splitting's edge restriction is not,
// confirmed through the exhaustive separator oracle. Graphs that provably
// admit no such character (the generator certifies nonexistence by exhaustive
// search) are tallied in `missing`.
inline SweepResult sweep_witness(long long count, int max_n = 8,
                                 unsigned long long seed = kDefaultSeed) {
  SweepResult res;
  res.name = "nonchordal_witness";
  Rng rng(seed);
  std::uniform_int_distribution<int> size_dist(4, max_n);
  int attempts = 0;
  while (res.checked < count && attempts < 200000) {
    ++attempts;
    Graph g = random_connected_graph(rng, size_dist(rng));
    if (is_chordal(g).chordal) continue;
    ++res.checked;
    bool ok = true;
    try {
      auto witness = nonchordal_witness(g);
      ok = witness.character_class.kind == KernelClass::FinitelyGenerated;
      ok = ok && witness.gamma3_class == RestrictionClass::NonFgKernel;
      ok = ok && check_splitting(g, witness.splitting).valid;
      // oracle-level confirmation of both sides
      ok = ok && !oracle::has_separating_subset(g, dead_subgraph(witness.character, g));
      Graph g3 = full_subgraph(g, witness.splitting.gamma3);
      Character f3 = witness.character.restrict_to(witness.splitting.gamma3);
      if (is_connected(g3))
        ok = ok && oracle::has_separating_subset(g3, dead_subgraph(f3, g3));
    } catch (const Error& e) {
      if (e.code() == "no_witness_exists") {
        ++res.missing;
        continue;
      }
      ok = false;
    }
    if (!ok) ++res.mismatches;
  }
  if (res.missing > 0)
    res.note = std::to_string(res.missing) + " graph(s) admit no witness character at all";
  return res;
}

// Exhaustive minimal-rank characterization over small block graphs.
inline SweepResult sweep_minimal_rank(long long graph_count, int max_n = 6,
                                      unsigned long long seed = kDefaultSeed) {
  SweepResult res;
  res.name = "minimal_rank";
  Rng rng(seed);
  while (res.checked < graph_count) {
    Graph g = random_block_graph(rng, max_n);
    ++res.checked;
    auto mu = minimal_rank(g);
    auto cuts = mu.cut_vertices;
    int n = g.vertex_count();
    std::vector<long long> entry(static_cast<std::size_t>(n), -3);
    bool ok = true;
    long long min_seen = -1;
    bool attainment_ok = true;
    while (true) {
      std::map<VertexId, long long> w;
      bool valid = true, any = false;
      for (int i = 0; i < n; ++i) {
        const auto& v = g.name(i);
        w[v] = entry[static_cast<std::size_t>(i)];
        if (set_contains(cuts, v) && w[v] == 0) valid = false;
        any = any || w[v] != 0;
      }
      if (valid && any) {
        Character f = Character::from_integers(w);
        long long rank = rank_formula(g, f).rank;
        if (min_seen == -1 || rank < min_seen) min_seen = rank;
        bool attains = attains_minimal_rank(g, f);
        if ((rank == mu.mu) != attains) attainment_ok = false;
      }
      int i = 0;
      for (; i < n; ++i) {
        if (entry[static_cast<std::size_t>(i)] < 3) {
          ++entry[static_cast<std::size_t>(i)];
          break;
        }
        entry[static_cast<std::size_t>(i)] = -3;
      }
      if (i == n) break;
    }
    ok = min_seen == mu.mu && attainment_ok;
    if (!ok) ++res.mismatches;
  }
  return res;
}

// Production separator/clique/block/cut-vertex algorithms against the
// exhaustive oracles.
inline SweepResult sweep_graph_algorithms(long long samples, int max_n = 9,
                                          unsigned long long seed = kDefaultSeed) {
  SweepResult res;
  res.name = "graph_algorithms";
  Rng rng(seed);
  auto check = [&](const Graph& g) {
    ++res.checked;
    bool ok = cut_vertices(g) == oracle::cut_vertices_by_definition(g);
    // definition route: v separates iff removing it disconnects
    for (const auto& v : g.vertices()) {
      if (g.vertex_count() < 3) break;
      bool def = is_separating(g, {v});
      ok = ok && def == set_contains(cut_vertices(g), v);
    }
    ok = ok && blocks(g) == oracle::blocks_exhaustive(g);
    ok = ok && maximal_cliques(g) == oracle::maximal_cliques_exhaustive(g);
    ok = ok && minimal_vertex_separators(g) == oracle::minimal_separators_exhaustive(g);
    // blocks partition the edges; block degrees see the block-cut tree
    auto bs = blocks(g);
    long long cover = 0;
    for (const auto& b : bs) cover += full_subgraph(g, b).edge_count();
    ok = ok && cover == g.edge_count();
    long long excess = 0;
    for (const auto& v : g.vertices()) excess += block_degree(g, v) - 1;
    ok = ok && excess == static_cast<long long>(bs.size()) - 1;
    if (!ok) ++res.mismatches;
  };
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : all_connected_graphs(n)) check(g);
  std::uniform_int_distribution<int> size_dist(6, std::max(6, max_n));
  while (res.checked < samples) check(random_connected_graph(rng, size_dist(rng)));
  return res;
}

// Flattened chordal decompositions do not depend on separator choices:
// the vertex/edge rank multisets and the Betti number are invariant under
// randomized tie-breaking, and classification is invariant under rescaling.
inline SweepResult sweep_order_independence(long long samples, int max_n = 8,
                                            unsigned long long seed = kDefaultSeed) {
  SweepResult res;
  res.name = "order_independence";
  Rng rng(seed);
  std::uniform_int_distribution<int> size_dist(3, max_n);
  int attempts = 0;
  while (res.checked < samples && attempts < 200000) {
    ++attempts;
    Graph g = random_connected_graph(rng, size_dist(rng));
    if (!is_chordal(g).chordal) continue;
    Character f = random_character(rng, g, -3, 3);
    if (!kernel_is_fg(f, g)) continue;
    ++res.checked;

    auto ranks_of = [](const GraphOfGroups& gog) {
      std::multiset<long long> vr, er;
      for (const auto& v : gog.vertices) vr.insert(*v.group.rank_if_known());
      for (const auto& e : gog.edges) er.insert(*e.group.rank_if_known());
      return std::make_tuple(vr, er, gog.betti());
    };
    auto base = chordal_dichotomy(g, f);
    bool ok = base.tame();
    if (ok) {
      auto want = ranks_of(*base.gog);
      for (unsigned long long trial = 1; trial <= 3 && ok; ++trial) {
        auto shuffled = chordal_dichotomy(g, f, seed + trial);
        ok = shuffled.tame() && ranks_of(*shuffled.gog) == want;
      }
      // rescaling invariance of the classification
      std::map<VertexId, Rational> scaled;
      for (const auto& [v, w] : f.weights()) scaled.emplace(v, Rational(3 * w, 2));
      Character f2 = Character::normalize(scaled);
      ok = ok && f2.weights() == f.weights();
    }
    if (!ok) ++res.mismatches;
  }
  return res;
}

// Hereditary chordality plus the restriction implications over random splittings.
inline SweepResult sweep_splitting_laws(long long samples, int max_n = 7,
                                        unsigned long long seed = kDefaultSeed) {
  SweepResult res;
  res.name = "splitting_laws";
  Rng rng(seed);
  std::uniform_int_distribution<int> size_dist(3, max_n);
  int attempts = 0;
  while (res.checked < samples && attempts < 200000) {
    ++attempts;
    Graph g = random_connected_graph(rng, size_dist(rng));
    if (is_complete(g)) continue;
    Character f = random_character(rng, g, -2, 2);
    SplittingTriple split = random_splitting(rng, g);
    ++res.checked;
    bool ok = true;
    try {
      auto rep = restriction_classification(f, g, split);  // asserts both implications
      ok = rep.fg_forces_f3_nonzero && rep.tame_propagates;
      auto dich = decompose_once(g, f, split);
      if (!dich.finite()) {
        // a vanishing separator restriction forces a wild kernel
        ok = ok && classify(f, g).kind == KernelClass::Wild;
      } else {
        long long i1 = dich.index1.value, i2 = dich.index2.value, i3 = dich.index3.value;
        ok = ok && betti_number(*dich.gog) == i3 - i1 - i2 + 1;
      }
      if (is_chordal(g).chordal) {
        // hereditary: full subgraphs of a chordal graph stay chordal
        ok = ok && is_chordal(full_subgraph(g, split.gamma1)).chordal &&
             is_chordal(full_subgraph(g, split.gamma2)).chordal;
      }
    } catch (const Error&) {
      ok = false;
    }
    if (!ok) ++res.mismatches;
  }
  return res;
}

struct SelftestOptions {
  int max_vertices = 8;
  unsigned long long seed = kDefaultSeed;
  long long scale = 1000;  // base sample count per randomized sweep
};

inline std::vector<SweepResult> run_selftest(const SelftestOptions& opts) {
  std::vector<SweepResult> out;
  out.push_back(sweep_graph_algorithms(opts.scale, std::min(opts.max_vertices, 9), opts.seed));
  out.push_back(sweep_dirac(opts.scale, std::min(opts.max_vertices, 8), opts.seed));
  out.push_back(sweep_trichotomy(opts.scale * 10, std::min(opts.max_vertices, 7), opts.seed));
  out.push_back(sweep_rank_identity(opts.scale, std::min(opts.max_vertices + 2, 10), opts.seed));
  out.push_back(sweep_tree_rank(std::max<long long>(opts.scale / 10, 100),
                                std::min(opts.max_vertices + 4, 12), opts.seed));
  out.push_back(sweep_orbit_count(std::max<long long>(opts.scale / 20, 50), opts.seed));
  out.push_back(sweep_witness(std::max<long long>(opts.scale / 10, 100),
                              std::min(opts.max_vertices, 8), opts.seed));
  out.push_back(sweep_minimal_rank(50, std::min(opts.max_vertices, 6), opts.seed));
  out.push_back(sweep_order_independence(opts.scale / 5, std::min(opts.max_vertices, 8), opts.seed));
  out.push_back(sweep_splitting_laws(opts.scale, std::min(opts.max_vertices, 7), opts.seed));
  return out;
}

}  // namespace artkernel::sweep

#endif  // ARTKERNEL_SWEEP_HPP
