#include "artkernel/io.hpp"

#include <gtest/gtest.h>

using namespace artkernel;

namespace {

Json parse(const std::string& text) { return Json::parse(text); }

TEST(GraphJson, RoundTrip) {
  auto j = parse(R"({"vertices": ["b", "a", "c"], "edges": [["a", "b"], ["b", "c"]]})");
  auto g = graph_from_json(j);
  EXPECT_EQ(g.vertex_count(), 3);
  EXPECT_EQ(g.edge_count(), 2);
  auto back = graph_to_json(g);
  EXPECT_EQ(graph_from_json(back).edges(), g.edges());
  // canonical order: vertices come back sorted
  EXPECT_EQ(back["vertices"][0], "a");
}

TEST(GraphJson, Rejections) {
  EXPECT_THROW(graph_from_json(parse(R"({"vertices": ["a", "a"], "edges": []})")), Error);
  EXPECT_THROW(graph_from_json(parse(R"({"vertices": ["a"], "edges": [["a", "a"]]})")), Error);
  EXPECT_THROW(
      graph_from_json(parse(R"({"vertices": ["a", "b"], "edges": [["a","b"], ["b","a"]]})")),
      Error);
  EXPECT_THROW(graph_from_json(parse(R"({"vertices": ["a"], "edges": [["a", "x"]]})")), Error);
  EXPECT_THROW(graph_from_json(parse(R"({"edges": []})")), Error);
  EXPECT_THROW(graph_from_json(parse(R"({"vertices": [1], "edges": []})")), Error);
}

TEST(CharacterJson, RationalsAndIntegers) {
  auto g = graph_from_json(parse(R"({"vertices": ["a", "b"], "edges": [["a", "b"]]})"));
  auto f = character_from_json(parse(R"({"weights": {"a": "1/2", "b": "3/2"}})"), g);
  EXPECT_EQ(f.value("a"), 1);
  EXPECT_EQ(f.value("b"), 3);
  auto h = character_from_json(parse(R"({"weights": {"a": 2, "b": -4}})"), g);
  EXPECT_EQ(h.value("a"), 1);
  EXPECT_EQ(h.value("b"), -2);

  EXPECT_THROW(character_from_json(parse(R"({"weights": {"a": 1.5, "b": 1}})"), g), Error);
  EXPECT_THROW(character_from_json(parse(R"({"weights": {"a": "1/0", "b": 1}})"), g), Error);
  EXPECT_THROW(character_from_json(parse(R"({"weights": {"a": 0, "b": 0}})"), g), Error);
  EXPECT_THROW(character_from_json(parse(R"({"weights": {"a": 1}})"), g), Error);
  EXPECT_THROW(character_from_json(parse(R"({"weights": {"a": 1, "b": 1, "c": 1}})"), g), Error);
}

TEST(RationalParsing, Forms) {
  EXPECT_EQ(parse_rational("7").num, 7);
  EXPECT_EQ(parse_rational("-3/6").num, -1);
  EXPECT_EQ(parse_rational("-3/6").den, 2);
  EXPECT_EQ(parse_rational("4/-6").num, -2);
  EXPECT_THROW(parse_rational(""), Error);
  EXPECT_THROW(parse_rational("x"), Error);
  EXPECT_THROW(parse_rational("1/2/3"), Error);
}

TEST(Dot, PlainGraphSyntax) {
  auto g = graph_from_json(parse(R"({"vertices": ["a", "b"], "edges": [["a", "b"]]})"));
  auto dot = graph_to_dot(g);
  EXPECT_NE(dot.find("graph G {"), std::string::npos);
  EXPECT_NE(dot.find("\"a\" -- \"b\";"), std::string::npos);
}

TEST(Reports, ClassificationJson) {
  auto g = graph_from_json(
      parse(R"({"vertices": ["a","b","c","d"], "edges": [["a","b"],["b","c"],["c","d"],["d","a"]]})"));
  auto f = character_from_json(parse(R"({"weights": {"a":1,"b":0,"c":1,"d":0}})"), g);
  auto j = classification_to_json(classify(f, g));
  EXPECT_EQ(j["class"], "wild");
  EXPECT_EQ(j["witness"].size(), 2u);
  EXPECT_EQ(j["living"].size(), 2u);
  auto f2 = character_from_json(parse(R"({"weights": {"a":1,"b":1,"c":0,"d":1}})"), g);
  EXPECT_EQ(classification_to_json(classify(f2, g))["class"], "fg");
}

TEST(Reports, RankJsonHasRankAndM) {
  auto g = graph_from_json(
      parse(R"({"vertices": ["a","b","c"], "edges": [["a","b"],["b","c"]]})"));
  auto f = character_from_json(parse(R"({"weights": {"a":1,"b":2,"c":1}})"), g);
  auto j = rank_report_to_json(rank_formula(g, f));
  EXPECT_EQ(j["rank"], 3);
  EXPECT_EQ(j["m"], 1);
  EXPECT_TRUE(j.contains("decomposition"));
}

TEST(Reports, GogJsonRoundStructure) {
  auto g = graph_from_json(
      parse(R"({"vertices": ["a","b","c"], "edges": [["a","b"],["b","c"]]})"));
  auto f = character_from_json(parse(R"({"weights": {"a":1,"b":2,"c":1}})"), g);
  auto res = chordal_dichotomy(g, f);
  ASSERT_TRUE(res.tame());
  auto j = gog_to_json(*res.gog);
  EXPECT_EQ(j["vertices"].size(), 2u);
  EXPECT_EQ(j["edges"].size(), 2u);
  EXPECT_EQ(j["betti"], 1);
  for (const auto& e : j["edges"]) {
    EXPECT_EQ(e["ends"].size(), 2u);
    EXPECT_EQ(e["group"]["type"], "free_abelian");
  }
  auto dot = gog_to_dot(*res.gog);
  EXPECT_NE(dot.find("label=\"Z\""), std::string::npos);
}

TEST(Reports, DescriptorJsonShapes) {
  EXPECT_EQ(descriptor_to_json(GroupDescriptor::free_abelian(2))["rank"], 2);
  EXPECT_EQ(descriptor_to_json(GroupDescriptor::free_group_infinite())["rank"], "infinite");
  auto kernel = GroupDescriptor::unresolved_kernel(
      {"a", "b"}, Character::from_integers({{"a", 1}, {"b", 2}}));
  auto j = descriptor_to_json(kernel);
  EXPECT_EQ(j["type"], "unresolved_kernel");
  EXPECT_EQ(j["weights"]["b"], 2);
  EXPECT_EQ(extended_index_to_json(ExtendedIndex::inf()), Json("infinite"));
  EXPECT_EQ(extended_index_to_json(ExtendedIndex::finite(4)), Json(4));
}

TEST(Reports, ByteIdenticalForIdenticalInput) {
  auto text = R"({"vertices": ["a","b","c"], "edges": [["a","b"],["b","c"]]})";
  auto g1 = graph_from_json(parse(text));
  auto g2 = graph_from_json(parse(text));
  auto f1 = character_from_json(parse(R"({"weights": {"a":1,"b":2,"c":1}})"), g1);
  auto f2 = character_from_json(parse(R"({"weights": {"a":1,"b":2,"c":1}})"), g2);
  EXPECT_EQ(chordal_result_to_json(chordal_dichotomy(g1, f1)).dump(2),
            chordal_result_to_json(chordal_dichotomy(g2, f2)).dump(2));
}

TEST(Csv, SweepTable) {
  std::vector<SweepRow> rows{{"bg1", "a=1;b=2", 1, 3, "fg"}};
  auto csv = sweep_csv(rows);
  EXPECT_EQ(csv, "graph_id,character,m,rank,class\nbg1,a=1;b=2,1,3,fg\n");
}

TEST(Files, MissingAndMalformed) {
  EXPECT_THROW(read_json_file("/nonexistent/file.json"), Error);
}

}  // namespace
