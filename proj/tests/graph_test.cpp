#include "artkernel/graph.hpp"

#include <gtest/gtest.h>

#include "artkernel/oracle.hpp"

using namespace artkernel;

namespace {

Graph path3() { return Graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }

Graph cycle4() {
  return Graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
}

Graph triangle() { return Graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}); }

// two triangles abv and vcd glued at v
Graph two_triangles_vertex() {
  return Graph({"a", "b", "v", "c", "d"},
               {{"a", "b"}, {"a", "v"}, {"b", "v"}, {"v", "c"}, {"v", "d"}, {"c", "d"}});
}

// two triangles auv and uvb glued along the edge uv
Graph two_triangles_edge() {
  return Graph({"a", "u", "v", "b"},
               {{"a", "u"}, {"a", "v"}, {"u", "v"}, {"u", "b"}, {"v", "b"}});
}

Graph complete(int n) {
  std::vector<VertexId> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(names[i], names[j]);
  return Graph(names, edges);
}

// 4-cycle a-b-c-d plus an apex e joined to all four cycle vertices
Graph wheel4() {
  return Graph({"a", "b", "c", "d", "e"}, {{"a", "b"},
                                           {"b", "c"},
                                           {"c", "d"},
                                           {"d", "a"},
                                           {"e", "a"},
                                           {"e", "b"},
                                           {"e", "c"},
                                           {"e", "d"}});
}

TEST(GraphConstruction, RejectsBadInput) {
  EXPECT_THROW(Graph({"a", "a"}, {}), Error);
  EXPECT_THROW(Graph({"a", "b"}, {{"a", "a"}}), Error);
  EXPECT_THROW(Graph({"a", "b"}, {{"a", "b"}, {"b", "a"}}), Error);
  EXPECT_THROW(Graph({"a", "b"}, {{"a", "c"}}), Error);
}

TEST(GraphConstruction, DegenerateGraphsAreValid) {
  Graph empty({}, {});
  EXPECT_EQ(empty.vertex_count(), 0);
  Graph single({"a"}, {});
  EXPECT_EQ(single.vertex_count(), 1);
  EXPECT_TRUE(is_connected(single));
  EXPECT_FALSE(is_connected(empty));
}

TEST(FullSubgraph, SpecExamples) {
  auto g = full_subgraph(cycle4(), {"a", "b", "c"});
  EXPECT_EQ(g.edge_count(), 2);  // path a-b-c, no chord a-c
  EXPECT_TRUE(g.adjacent("a", "b"));
  EXPECT_TRUE(g.adjacent("b", "c"));
  EXPECT_FALSE(g.adjacent("a", "c"));

  auto whole = full_subgraph(cycle4(), cycle4().vertex_set());
  EXPECT_EQ(whole.edges(), cycle4().edges());

  auto edge = full_subgraph(triangle(), {"a", "c"});
  EXPECT_EQ(edge.edge_count(), 1);
  EXPECT_THROW(full_subgraph(triangle(), {"x"}), Error);
}

TEST(ComplementSubgraph, SpecExamples) {
  auto isolated = complement_subgraph(path3(), {"b"});
  EXPECT_EQ(isolated.vertex_count(), 2);
  EXPECT_EQ(isolated.edge_count(), 0);

  auto edge = complement_subgraph(path3(), {"a"});
  EXPECT_EQ(edge.edge_count(), 1);

  auto same = complement_subgraph(path3(), {});
  EXPECT_EQ(same.edges(), path3().edges());
}

TEST(IsSeparating, SpecExamples) {
  EXPECT_TRUE(is_separating(path3(), {"b"}));
  EXPECT_TRUE(is_separating(cycle4(), {"a", "c"}));
  EXPECT_FALSE(is_separating(cycle4(), {"a"}));
  EXPECT_THROW(is_separating(path3(), {"a", "b", "c"}), Error);
  EXPECT_THROW(is_separating(path3(), {}), Error);
  EXPECT_THROW(is_separating(Graph({"a"}, {}), {"a"}), Error);
  Graph disconnected({"a", "b"}, {});
  EXPECT_THROW(is_separating(disconnected, {"a"}), Error);
}

TEST(CutVertices, SpecExamples) {
  EXPECT_EQ(cut_vertices(path3()), VertexSet{"b"});
  EXPECT_TRUE(cut_vertices(cycle4()).empty());
  EXPECT_EQ(cut_vertices(two_triangles_vertex()), VertexSet{"v"});
  EXPECT_EQ(cut_vertices(two_triangles_vertex()),
            oracle::cut_vertices_by_definition(two_triangles_vertex()));
}

TEST(Blocks, SpecExamples) {
  std::vector<VertexSet> path_blocks{{"a", "b"}, {"b", "c"}};
  EXPECT_EQ(blocks(path3()), path_blocks);
  EXPECT_EQ(blocks(triangle()), std::vector<VertexSet>{triangle().vertex_set()});
  auto tt = two_triangles_vertex();
  EXPECT_EQ(blocks(tt), oracle::blocks_exhaustive(tt));
  std::vector<VertexSet> tt_blocks{{"a", "b", "v"}, {"c", "d", "v"}};
  EXPECT_EQ(blocks(tt), tt_blocks);
  EXPECT_EQ(blocks(Graph({"a"}, {})), std::vector<VertexSet>{{"a"}});
}

TEST(BlockDegree, SpecExamples) {
  EXPECT_EQ(block_degree(path3(), "b"), 2);
  EXPECT_EQ(block_degree(path3(), "a"), 1);
  Graph star({"c", "x", "y", "z"}, {{"c", "x"}, {"c", "y"}, {"c", "z"}});
  EXPECT_EQ(block_degree(star, "c"), 3);
  EXPECT_EQ(blocks(star), oracle::blocks_exhaustive(star));
}

TEST(Chordality, SpecExamples) {
  auto c4 = is_chordal(cycle4());
  EXPECT_FALSE(c4.chordal);
  EXPECT_EQ(c4.chordless_cycle.size(), 4u);

  Graph tree({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"b", "d"}});
  auto t = is_chordal(tree);
  EXPECT_TRUE(t.chordal);
  EXPECT_EQ(t.elimination_order.size(), 4u);

  auto w = is_chordal(wheel4());
  EXPECT_FALSE(w.chordal);  // the outer 4-cycle stays chordless
  EXPECT_GE(w.chordless_cycle.size(), 4u);
}

TEST(Chordality, CertificatesAreSound) {
  // chordless-cycle witness: consecutive vertices adjacent, nothing else
  auto res = is_chordal(cycle4());
  const auto& cyc = res.chordless_cycle;
  for (std::size_t i = 0; i < cyc.size(); ++i)
    for (std::size_t j = i + 1; j < cyc.size(); ++j) {
      bool consecutive = j == i + 1 || (i == 0 && j + 1 == cyc.size());
      EXPECT_EQ(cycle4().adjacent(cyc[i], cyc[j]), consecutive);
    }
  // elimination order: later neighbors of each vertex form a clique
  auto g = two_triangles_edge();
  auto cert = is_chordal(g);
  ASSERT_TRUE(cert.chordal);
  std::map<VertexId, int> pos;
  for (std::size_t i = 0; i < cert.elimination_order.size(); ++i)
    pos[cert.elimination_order[i]] = static_cast<int>(i);
  for (const auto& v : g.vertices()) {
    VertexSet later;
    for (int w : g.neighbors(g.index_of(v)))
      if (pos[g.name(w)] > pos[v]) later.push_back(g.name(w));
    EXPECT_TRUE(is_clique(g, make_vertex_set(later)));
  }
}

TEST(MinimalSeparators, SpecExamples) {
  EXPECT_EQ(minimal_vertex_separators(path3()), std::vector<VertexSet>{{"b"}});
  std::vector<VertexSet> c4_seps{{"a", "c"}, {"b", "d"}};
  EXPECT_EQ(minimal_vertex_separators(cycle4()), c4_seps);
  EXPECT_EQ(minimal_vertex_separators(cycle4()), oracle::minimal_separators_exhaustive(cycle4()));
  auto tte = two_triangles_edge();
  std::vector<VertexSet> uv{{"u", "v"}};
  EXPECT_EQ(minimal_vertex_separators(tte), uv);
  EXPECT_EQ(minimal_vertex_separators(tte), oracle::minimal_separators_exhaustive(tte));
  EXPECT_TRUE(minimal_vertex_separators(complete(4)).empty());
}

TEST(MaximalCliques, SpecExamples) {
  EXPECT_EQ(maximal_cliques(triangle()), std::vector<VertexSet>{triangle().vertex_set()});
  std::vector<VertexSet> path_cliques{{"a", "b"}, {"b", "c"}};
  EXPECT_EQ(maximal_cliques(path3()), path_cliques);
  auto tte = two_triangles_edge();
  std::vector<VertexSet> tte_cliques{{"a", "u", "v"}, {"b", "u", "v"}};
  EXPECT_EQ(maximal_cliques(tte), tte_cliques);
  EXPECT_EQ(maximal_cliques(tte), oracle::maximal_cliques_exhaustive(tte));
}

TEST(SplitsOverAbelian, SpecExamples) {
  auto k4 = splits_over_abelian(complete(4));
  EXPECT_TRUE(k4.value);
  EXPECT_EQ(k4.reason, "complete");

  auto c4 = splits_over_abelian(cycle4());
  EXPECT_FALSE(c4.value);

  auto tt = splits_over_abelian(two_triangles_vertex());
  EXPECT_TRUE(tt.value);
  EXPECT_EQ(tt.reason, "separating_clique");
  EXPECT_EQ(tt.clique, VertexSet{"v"});

  Graph disconnected({"a", "b"}, {});
  EXPECT_EQ(splits_over_abelian(disconnected).reason, "disconnected");
}

TEST(IsBlockGraph, SpecExamples) {
  Graph tree({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"b", "d"}});
  EXPECT_TRUE(is_block_graph(tree));
  EXPECT_TRUE(is_block_graph(two_triangles_vertex()));
  EXPECT_FALSE(is_block_graph(cycle4()));
}

TEST(Blocks, PartitionEdgesAndCountExcess) {
  for (const Graph& g : {path3(), cycle4(), two_triangles_vertex(), two_triangles_edge(),
                         wheel4(), complete(5)}) {
    auto bs = blocks(g);
    int covered = 0;
    for (const auto& b : bs) covered += full_subgraph(g, b).edge_count();
    EXPECT_EQ(covered, g.edge_count());
    long long excess = 0;
    for (const auto& v : g.vertices()) excess += block_degree(g, v) - 1;
    EXPECT_EQ(excess, static_cast<long long>(bs.size()) - 1);
  }
}

TEST(Chordality, HereditaryOnInducedSubgraphs) {
  auto g = two_triangles_edge();
  ASSERT_TRUE(is_chordal(g).chordal);
  std::vector<VertexSet> subsets{{"a", "u", "v"}, {"a", "b", "u"}, {"u", "v"}, {"a", "b"}};
  for (const auto& s : subsets) EXPECT_TRUE(is_chordal(full_subgraph(g, s)).chordal);
}

}  // namespace
