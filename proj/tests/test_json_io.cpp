#include <gtest/gtest.h>

#include <random>

#include "crslab/json_io.hpp"

using namespace crslab;

namespace {

Graph random_plain(std::size_t n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<IndexEdge> e;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (coin(rng)) e.emplace_back(i, j);
  return plain_graph(n, e);
}

}  // namespace

TEST(JsonVertex, Encodings) {
  EXPECT_EQ(to_json(VertexLabel{PlainVertex{7}}).dump(), "7");
  EXPECT_EQ(to_json(VertexLabel{BaseVertex{3}}).dump(), "\"b3\"");
  EXPECT_EQ(to_json(VertexLabel{LatticeVector({1, 3})}).dump(), "[1,3]");
  EXPECT_EQ(vertex_from_json(json::parse("\"b12\"")), VertexLabel{BaseVertex{12}});
  EXPECT_EQ(vertex_from_json(json::parse("[2,1]")), VertexLabel{LatticeVector({2, 1})});
  for (const char* bad : {"\"b0\"", "\"bx\"", "-1", "[0,1]", "[]", "1.5", "null"})
    EXPECT_THROW(vertex_from_json(json::parse(bad)), error) << bad;
}

TEST(JsonGraph, PlainRoundTrip) {
  std::mt19937 rng(11);
  for (int t = 0; t < 50; ++t) {
    auto g = random_plain(2 + t % 11, 0.4, rng);
    EXPECT_EQ(graph_from_json(json::parse(to_json(g).dump())), g);
  }
}

TEST(JsonGraph, RejectsMalformed) {
  EXPECT_THROW(graph_from_json(json::parse(R"({"vertices":[0,1]})")), error);
  EXPECT_THROW(graph_from_json(json::parse(R"({"vertices":[0,1],"edges":[[0]]})")), error);
  EXPECT_THROW(graph_from_json(json::parse(R"({"vertices":[0,1],"edges":[[0,2]]})")), error);
  EXPECT_THROW(graph_from_json(json::parse(R"({"vertices":[0,0],"edges":[]})")), error);
  EXPECT_THROW(parse_graph_text("{not json"), error);
  EXPECT_THROW(parse_graph_text("   "), error);
}

TEST(JsonComposite, RoundTripAndMaterialize) {
  for (const auto& c : {compose(complete_base(2), u_graph(2)), compose(null_base(3), r_graph(3)),
                        compose(null_base(2), t_graph(2))}) {
    auto j = to_json(c);
    EXPECT_TRUE(is_composite_json(j));
    auto back = composite_from_json(json::parse(j.dump()));
    EXPECT_EQ(back.base(), c.base());
    EXPECT_EQ(back.lattice(), c.lattice());
    EXPECT_EQ(graph_from_json(j), c.materialize());
  }
  EXPECT_THROW(composite_from_json(json::parse(R"({"k":2,"m":2,"base_edges":[[1,3]],"lattice_edges":[]})")),
               error);
  EXPECT_THROW(composite_from_json(json::parse(R"({"k":2,"m":2,"base_edges":[],"lattice_edges":[[[1,3],[1,1]]]})")),
               error);
}

TEST(ParseGraphText, RecognisesCompositeLabeledForm) {
  const auto c = compose(null_base(2), t_graph(2));
  auto g = parse_graph_text(to_json(c.materialize()).dump());
  ASSERT_TRUE(std::holds_alternative<CompositeGraph>(g));
  EXPECT_EQ(std::get<CompositeGraph>(g).lattice(), t_graph(2));
  EXPECT_EQ(as_graph(g), c.materialize());

  auto lattice = parse_graph_text(to_json(t_graph(2)).dump());
  ASSERT_TRUE(std::holds_alternative<Graph>(lattice));
  EXPECT_EQ(std::get<Graph>(lattice), t_graph(2));

  // base vertices with a missing cross edge stay a plain labeled graph
  auto broken = c.materialize().with_edge(0, 2, false);
  auto parsed = parse_graph_text(to_json(broken).dump());
  ASSERT_TRUE(std::holds_alternative<Graph>(parsed));
  EXPECT_EQ(std::get<Graph>(parsed), broken);
}

TEST(ParseGraphText, Graph6) {
  auto g = parse_graph_text("C~\n");
  const std::vector<IndexEdge> k4{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  EXPECT_EQ(as_graph(g), plain_graph(4, k4));
  auto u = compose(complete_base(2), u_graph(2)).materialize();
  EXPECT_EQ(as_graph(parse_graph_text(to_graph6(as_plain(u)))), as_plain(u));
}

TEST(VertexList, Forms) {
  auto w = parse_vertex_list("b1, (1,2),[2, 3],7");
  ASSERT_EQ(w.size(), 4u);
  EXPECT_EQ(w[0], VertexLabel{BaseVertex{1}});
  EXPECT_EQ(w[1], VertexLabel{LatticeVector({1, 2})});
  EXPECT_EQ(w[2], VertexLabel{LatticeVector({2, 3})});
  EXPECT_EQ(w[3], VertexLabel{PlainVertex{7}});
  EXPECT_TRUE(parse_vertex_list("").empty());
  EXPECT_THROW(parse_vertex_list("(1,2"), error);
  EXPECT_THROW(parse_vertex_list("x"), error);
  EXPECT_THROW(parse_vertex_list("(1,a)"), error);
}

TEST(JsonCertificate, TableFollowsW) {
  auto g = compose(complete_base(2), u_graph(2)).materialize();
  std::vector<VertexLabel> w{BaseVertex{1}, BaseVertex{2}};
  auto outcome = check_crs(g, std::span<const VertexLabel>(w));
  ASSERT_TRUE(std::holds_alternative<CrsCertificate>(outcome));
  auto j = to_json(std::get<CrsCertificate>(outcome));
  EXPECT_EQ(j["w"].dump(), R"(["b1","b2"])");
  EXPECT_EQ(j["m"], 2);
  EXPECT_EQ(j["table"].size(), 4u);
  for (auto& row : j["table"]) EXPECT_EQ(row[0], row[1]);

  std::vector<VertexLabel> one{BaseVertex{1}};
  auto fail = check_crs(g, std::span<const VertexLabel>(one));
  ASSERT_TRUE(std::holds_alternative<CrsFailure>(fail));
  EXPECT_EQ(to_json(std::get<CrsFailure>(fail))["failure"], "CardinalityMismatch");
}

TEST(JsonReports, Shapes) {
  auto m = to_json(member_C(t_graph(2)));
  EXPECT_TRUE(m["member"].get<bool>());
  EXPECT_EQ(m["checks"].size(), 4u);
  auto bad = to_json(member_C(empty_lattice(2, 3)));
  EXPECT_FALSE(bad["member"].get<bool>());
  bool any_uncovered = false;
  for (auto& c : bad["checks"]) any_uncovered = any_uncovered || !c["uncovered"].is_null();
  EXPECT_TRUE(any_uncovered);

  EXPECT_EQ(to_json(bounds_C(3)).dump(), R"({"lower":14,"upper":39})");
  auto t = to_json(tightness_B(complete_base(2), u_graph(2)));
  EXPECT_EQ(t["actual"], 1);
  EXPECT_TRUE(t["consistent"].get<bool>());

  auto v = to_json(is_completeness_resolvable(path_graph(4)));
  EXPECT_EQ(v["verdict"], "Path");
}

TEST(Dot, ListsEveryVertexAndEdge) {
  auto s = to_dot(compose(complete_base(2), u_graph(2)));
  EXPECT_EQ(s.rfind("graph G {\n", 0), 0u);
  EXPECT_NE(s.find("\"b1\" -- \"b2\";"), std::string::npos);
  EXPECT_NE(s.find("\"(2,2)\";"), std::string::npos);
  std::size_t edges = 0;
  for (std::size_t p = s.find("--"); p != std::string::npos; p = s.find("--", p + 2)) ++edges;
  EXPECT_EQ(edges, compose(complete_base(2), u_graph(2)).materialize().size());
}
