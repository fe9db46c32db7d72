#include "artkernel/character.hpp"

#include <gtest/gtest.h>

#include "artkernel/oracle.hpp"
#include "artkernel/splitting.hpp"
#include "artkernel/sweep.hpp"

using namespace artkernel;

namespace {

Graph cycle4() {
  return Graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
}

Graph path3() { return Graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }

Graph triangle() { return Graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}); }

Character chr(std::map<VertexId, long long> w) { return Character::from_integers(w); }

TEST(Normalize, ClearsDenominatorsAndGcd) {
  auto f = Character::normalize({{"a", Rational(1, 2)}, {"b", Rational(3, 2)}});
  EXPECT_EQ(f.value("a"), 1);
  EXPECT_EQ(f.value("b"), 3);

  auto g = chr({{"a", 2}, {"b", 4}, {"c", 6}});
  EXPECT_EQ(g.value("a"), 1);
  EXPECT_EQ(g.value("b"), 2);
  EXPECT_EQ(g.value("c"), 3);

  auto h = chr({{"a", -3}});
  EXPECT_EQ(h.value("a"), -1);

  EXPECT_THROW(chr({{"a", 0}, {"b", 0}}), Error);
}

TEST(ImageOn, GcdOfWeights) {
  auto f = chr({{"a", 2}, {"b", 4}, {"c", 6}});  // stores (1,2,3)
  EXPECT_EQ(image_on(f, {"b", "c"}), 1);
  EXPECT_EQ(image_on(chr({{"a", 1}, {"b", 0}}), {"b"}), 0);
  auto g = chr({{"a", 2}, {"b", 4}, {"c", 1}});
  EXPECT_EQ(image_on(g, {"a", "b"}), 2);
  EXPECT_THROW(image_on(f, {}), Error);
}

TEST(IndexOfSubgraph, SpecExamples) {
  auto f = chr({{"a", 1}, {"b", 2}, {"c", 1}});
  auto whole = VertexSet{"a", "b", "c"};
  auto idx = index_of_subgraph(f, whole, {"b"});
  EXPECT_FALSE(idx.infinite);
  EXPECT_EQ(idx.value, 2);

  auto same = index_of_subgraph(f, whole, whole);
  EXPECT_EQ(same.value, 1);

  auto g = chr({{"a", 1}, {"b", 0}, {"c", 1}});
  EXPECT_TRUE(index_of_subgraph(g, whole, {"b"}).infinite);

  auto zero_ambient = chr({{"a", 0}, {"b", 1}});
  EXPECT_THROW(index_of_subgraph(zero_ambient, {"a"}, {"a"}), Error);
}

TEST(LivingDead, SquareExamples) {
  auto g = cycle4();
  auto f = chr({{"a", 1}, {"b", 1}, {"c", 0}, {"d", 1}});
  VertexSet living{"a", "b", "d"}, dead{"c"};
  EXPECT_EQ(living_subgraph(f, g), living);
  EXPECT_EQ(dead_subgraph(f, g), dead);

  auto all = chr({{"a", 1}, {"b", 2}, {"c", 3}, {"d", 4}});
  EXPECT_EQ(living_subgraph(all, g), g.vertex_set());
  EXPECT_TRUE(dead_subgraph(all, g).empty());

  auto alt = chr({{"a", 1}, {"b", 0}, {"c", 1}, {"d", 0}});
  VertexSet ac{"a", "c"}, bd{"b", "d"};
  EXPECT_EQ(living_subgraph(alt, g), ac);
  EXPECT_EQ(dead_subgraph(alt, g), bd);
}

TEST(KernelIsFg, SpecExamples) {
  auto g = cycle4();
  EXPECT_TRUE(kernel_is_fg(chr({{"a", 1}, {"b", 1}, {"c", 0}, {"d", 1}}), g));
  EXPECT_FALSE(kernel_is_fg(chr({{"a", 1}, {"b", 0}, {"c", 1}, {"d", 0}}), g));

  Graph star({"c", "x", "y", "z"}, {{"c", "x"}, {"c", "y"}, {"c", "z"}});
  EXPECT_FALSE(kernel_is_fg(chr({{"c", 0}, {"x", 1}, {"y", 1}, {"z", 1}}), star));
  // a living center dominates its dead leaves
  EXPECT_TRUE(kernel_is_fg(chr({{"c", 1}, {"x", 0}, {"y", 0}, {"z", 0}}), star));

  Graph disconnected({"a", "b"}, {});
  EXPECT_THROW(kernel_is_fg(chr({{"a", 1}, {"b", 1}}), disconnected), Error);
}

TEST(Classify, CompleteGraphsAreAlwaysTame) {
  // no separating subgraph at all, even with dead vertices
  auto f = chr({{"a", 1}, {"b", 0}, {"c", 0}});
  auto res = classify(f, triangle());
  EXPECT_EQ(res.kind, KernelClass::FinitelyGenerated);
}

TEST(Classify, WildWitnesses) {
  auto g = cycle4();
  auto res = classify(chr({{"a", 1}, {"b", 0}, {"c", 1}, {"d", 0}}), g);
  EXPECT_EQ(res.kind, KernelClass::Wild);
  VertexSet bd{"b", "d"};
  EXPECT_EQ(res.witness, bd);
  EXPECT_EQ(res.witness_kind, "dead_subgraph");

  // living {a} connected, c undominated: witness is the dead link of c
  auto p = path3();
  auto link = classify(chr({{"a", 1}, {"b", 0}, {"c", 0}}), p);
  EXPECT_EQ(link.kind, KernelClass::Wild);
  EXPECT_EQ(link.witness, VertexSet{"b"});
  EXPECT_EQ(link.witness_kind, "link");
  EXPECT_EQ(link.link_vertex, "c");
}

TEST(Classify, WitnessIsSeparatingAndDead) {
  auto g = cycle4();
  for (auto weights : std::vector<std::map<VertexId, long long>>{
           {{"a", 1}, {"b", 0}, {"c", 1}, {"d", 0}},
           {{"a", 0}, {"b", 1}, {"c", 0}, {"d", 1}},
           {{"a", 2}, {"b", 0}, {"c", -2}, {"d", 0}}}) {
    auto res = classify(chr(weights), g);
    ASSERT_EQ(res.kind, KernelClass::Wild);
    EXPECT_TRUE(is_separating(g, res.witness));
    EXPECT_TRUE(set_subset(res.witness, res.dead));
  }
}

TEST(Classify, AgreesWithExhaustiveSeparatorOracle) {
  auto g = cycle4();
  for (long long wa = -1; wa <= 1; ++wa)
    for (long long wb = -1; wb <= 1; ++wb)
      for (long long wc = -1; wc <= 1; ++wc)
        for (long long wd = -1; wd <= 1; ++wd) {
          if (wa == 0 && wb == 0 && wc == 0 && wd == 0) continue;
          auto f = chr({{"a", wa}, {"b", wb}, {"c", wc}, {"d", wd}});
          bool wild = classify(f, g).kind == KernelClass::Wild;
          EXPECT_EQ(wild, oracle::has_separating_subset(g, dead_subgraph(f, g)));
        }
}

TEST(Classify, ExhaustiveTrichotomyOnTinyGraphs) {
  // every connected labeled graph on <= 4 vertices, every character with
  // entries in -2..2: non-fg coincides with a separating subgraph inside the
  // dead subgraph
  for (int n = 2; n <= 4; ++n) {
    for (const auto& g : sweep::all_connected_graphs(n)) {
      std::vector<long long> entry(static_cast<std::size_t>(n), -2);
      while (true) {
        bool any = false;
        std::map<VertexId, long long> w;
        for (int i = 0; i < n; ++i) {
          w[g.name(i)] = entry[static_cast<std::size_t>(i)];
          any = any || entry[static_cast<std::size_t>(i)] != 0;
        }
        if (any) {
          auto f = chr(w);
          bool fg = kernel_is_fg(f, g);
          ASSERT_EQ(!fg, oracle::has_separating_subset(g, dead_subgraph(f, g)));
          ASSERT_EQ(classify(f, g).kind == KernelClass::Wild, !fg);
        }
        int i = 0;
        for (; i < n; ++i) {
          if (entry[static_cast<std::size_t>(i)] < 2) {
            ++entry[static_cast<std::size_t>(i)];
            break;
          }
          entry[static_cast<std::size_t>(i)] = -2;
        }
        if (i == n) break;
      }
    }
  }
}

TEST(Classify, RescalingInvariance) {
  auto g = cycle4();
  std::map<VertexId, Rational> raw{
      {"a", Rational(3, 4)}, {"b", Rational(3, 2)}, {"c", Rational(0)}, {"d", Rational(9, 4)}};
  auto f = Character::normalize(raw);
  std::map<VertexId, Rational> scaled;
  for (auto& [v, q] : raw) scaled.emplace(v, Rational(q.num * 5, q.den * 7));
  auto f2 = Character::normalize(scaled);
  EXPECT_EQ(f.weights(), f2.weights());
  EXPECT_EQ(classify(f, g).kind, classify(f2, g).kind);
}

TEST(RestrictionClassification, SpecExamples) {
  auto g = cycle4();
  SplittingTriple top_bottom{{"a", "b", "d"}, {"b", "c", "d"}, {"b", "d"}};

  auto rep = restriction_classification(chr({{"a", 1}, {"b", 1}, {"c", 0}, {"d", 1}}), g,
                                        top_bottom);
  EXPECT_NE(rep.r3, RestrictionClass::Zero);
  EXPECT_NE(rep.r1, RestrictionClass::Zero);
  EXPECT_NE(rep.r2, RestrictionClass::Zero);
  EXPECT_TRUE(rep.kernel_fg);
  EXPECT_TRUE(rep.fg_forces_f3_nonzero);

  auto p = path3();
  SplittingTriple mid{{"a", "b"}, {"b", "c"}, {"b"}};
  auto rep2 = restriction_classification(chr({{"a", 1}, {"b", 1}, {"c", 1}}), p, mid);
  EXPECT_EQ(rep2.r1, RestrictionClass::FgKernel);
  EXPECT_EQ(rep2.r2, RestrictionClass::FgKernel);
  EXPECT_EQ(rep2.r3, RestrictionClass::FgKernel);
  EXPECT_TRUE(rep2.gamma3_connected);
  EXPECT_TRUE(rep2.tame_propagates);

  auto rep3 = restriction_classification(chr({{"a", 1}, {"b", 0}, {"c", 1}, {"d", 0}}), g,
                                         top_bottom);
  EXPECT_EQ(rep3.r3, RestrictionClass::Zero);
  EXPECT_FALSE(rep3.kernel_fg);

  SplittingTriple bogus{{"a", "b", "c", "d"}, {"b", "c", "d"}, {"b", "c", "d"}};
  EXPECT_THROW(restriction_classification(chr({{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}}), g, bogus),
               Error);
}

TEST(ComponentFreeProduct, DisconnectedGraphs) {
  Graph g({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
  auto f = chr({{"a", 1}, {"b", 1}, {"c", 0}, {"d", 0}});
  auto comps = component_free_product(f, g);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0].restriction, RestrictionClass::FgKernel);
  EXPECT_EQ(comps[1].restriction, RestrictionClass::Zero);
}

TEST(Character, KeyValidation) {
  auto g = path3();
  EXPECT_THROW(chr({{"a", 1}, {"b", 1}}).check_keys(g), Error);
  EXPECT_THROW(chr({{"a", 1}, {"b", 1}, {"c", 1}, {"x", 1}}).check_keys(g), Error);
  EXPECT_NO_THROW(chr({{"a", 1}, {"b", 1}, {"c", 1}}).check_keys(g));
}

}  // namespace
