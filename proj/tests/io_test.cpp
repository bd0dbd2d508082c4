#include <gtest/gtest.h>

#include <random>

#include "shiftgraph/coloring.hpp"
#include "shiftgraph/constructors.hpp"
#include "shiftgraph/io.hpp"
#include "shiftgraph/oracle.hpp"

using namespace shiftgraph;

TEST(Json, ParsesPath) {
  auto g = graph_from_json(R"({"n":3,"directed":false,"edges":[[0,1],[1,2]]})");
  ASSERT_TRUE(std::holds_alternative<UndirectedGraph>(g));
  EXPECT_EQ(std::get<UndirectedGraph>(g), UndirectedGraph(3, {{0, 1}, {1, 2}}));
}

TEST(Json, RejectsBadInput) {
  EXPECT_THROW(graph_from_json(R"({"n":2,"directed":true,"edges":[[0,1],[1,0]]})"), InputError);
  EXPECT_THROW(graph_from_json("{not json"), InputError);
  EXPECT_THROW(graph_from_json(R"({"n":2,"directed":false,"edges":[[0,2]]})"), InputError);
  EXPECT_THROW(graph_from_json(R"({"n":2,"directed":false,"edges":[[1,1]]})"), InputError);
  EXPECT_THROW(graph_from_json(R"({"n":2,"directed":false,"edges":[[0,1],[1,0]]})"), InputError);
  EXPECT_THROW(graph_from_json(R"({"directed":false,"edges":[]})"), InputError);
  EXPECT_THROW(graph_from_json(R"({"n":2,"directed":false,"edges":[[0,1]],"labels":{"5":"x"}})"),
               InputError);
}

TEST(Json, CycleCarriesWitness) {
  try {
    graph_from_json(R"({"n":3,"directed":true,"edges":[[0,1],[1,2],[2,0]]})");
    FAIL() << "expected CycleError";
  } catch (const CycleError &e) {
    EXPECT_EQ(e.witness(), (std::vector<Vertex>{0, 1, 2, 0}));
  }
}

TEST(Json, CanonicalBytes) {
  UndirectedGraph g(3, {{2, 1}, {1, 0}}, {"x", "y", "z"});
  EXPECT_EQ(to_json(g),
            R"({"n": 3, "directed": false, "edges": [[0, 1], [1, 2]], "labels": {"0": "x", "1": "y", "2": "z"}})");
  EXPECT_EQ(to_json(AcyclicDigraph(2, {{1, 0}})), R"({"n": 2, "directed": true, "edges": [[1, 0]]})");
  EXPECT_EQ(to_json(UndirectedGraph(0)), R"({"n": 0, "directed": false, "edges": []})");
}

TEST(Json, RoundTripRandom) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    int n = static_cast<int>(rng() % 12);
    auto d = oracle::random_acyclic_digraph(rng, n, 0.4);
    auto back = graph_from_json(to_json(d));
    ASSERT_EQ(std::get<AcyclicDigraph>(back), d);
    ASSERT_EQ(to_json(back), to_json(d));
    auto u = d.underlying();
    ASSERT_EQ(std::get<UndirectedGraph>(graph_from_json(to_json(u))), u);
  }
  auto s = shift_graph(7, 3);
  EXPECT_EQ(undirected_from_json(to_json(s)), s);
  auto z = zykov(4).orientation.to_digraph();
  EXPECT_EQ(digraph_from_json(to_json(z)), z);
}

TEST(Json, OrientationRoundTrip) {
  UndirectedGraph p3(3, {{0, 1}, {1, 2}});
  Orientation o(p3, {Direction::Backward, Direction::Forward});
  EXPECT_EQ(orientation_to_json(o), R"({"edges": [[1, 0], [1, 2]]})");
  EXPECT_EQ(orientation_from_json(p3, orientation_to_json(o)), o);
  EXPECT_THROW(orientation_from_json(p3, R"({"edges": [[1, 0]]})"), InputError);
}

TEST(Json, ColoringRoundTrip) {
  UndirectedGraph p3(3, {{0, 1}, {1, 2}});
  Coloring c(p3, {0, 1, 0}, 3);
  EXPECT_EQ(coloring_to_json(c), R"({"palette": 3, "colors": {"0": 0, "1": 1, "2": 0}})");
  EXPECT_EQ(coloring_from_json(p3, coloring_to_json(c)), c);
  EXPECT_THROW(coloring_from_json(p3, R"({"colors": {"0": 0, "1": 0, "2": 1}})"), InputError);
  EXPECT_THROW(coloring_from_json(p3, R"({"colors": {"0": 0, "1": 1}})"), InputError);
}

TEST(Dot, SpecExamples) {
  EXPECT_EQ(to_dot(UndirectedGraph(0)), "graph G {\n}\n");
  UndirectedGraph p3(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(to_dot(p3), "graph G {\n  0;\n  1;\n  2;\n  0 -- 1;\n  1 -- 2;\n}\n");
  EXPECT_EQ(to_dot(AcyclicDigraph(3, {{0, 1}, {1, 2}})),
            "digraph G {\n  0;\n  1;\n  2;\n  0 -> 1;\n  1 -> 2;\n}\n");
  Orientation o(p3, {Direction::Forward, Direction::Unset});
  EXPECT_EQ(to_dot(o), "digraph G {\n  0;\n  1;\n  2;\n  0 -> 1;\n  1 -> 2 [dir=none];\n}\n");
  UndirectedGraph lab(1, {}, {"a\"b"});
  EXPECT_NE(to_dot(lab).find("label="), std::string::npos);
}
