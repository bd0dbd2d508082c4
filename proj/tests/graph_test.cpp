#include <gtest/gtest.h>

#include <algorithm>

#include "shiftgraph/constructors.hpp"
#include "shiftgraph/graph.hpp"

using namespace shiftgraph;

TEST(UndirectedGraph, CanonicalizesEdges) {
  UndirectedGraph g(4, {{2, 1}, {0, 3}, {1, 0}});
  std::vector<Edge> want{{0, 1}, {0, 3}, {1, 2}};
  EXPECT_TRUE(std::ranges::equal(g.edges(), want));
  EXPECT_EQ(g.degree(0), 2);
  EXPECT_TRUE(g.adjacent(2, 1));
  EXPECT_FALSE(g.adjacent(2, 3));
  EXPECT_EQ(g.edge_index(3, 0), 1u);
  EXPECT_EQ(g.edge_index(2, 3), std::nullopt);
}

TEST(UndirectedGraph, RejectsLoopsDuplicatesAndRange) {
  EXPECT_THROW(UndirectedGraph(3, {{1, 1}}), InputError);
  EXPECT_THROW(UndirectedGraph(3, {{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(UndirectedGraph(3, {{0, 3}}), InputError);
  EXPECT_THROW(UndirectedGraph(-1), InputError);
}

TEST(UndirectedGraph, LabelFallsBackToId) {
  UndirectedGraph g(2, {{0, 1}});
  EXPECT_EQ(g.label(1), "1");
  UndirectedGraph h(2, {{0, 1}}, {"a", "b"});
  EXPECT_EQ(h.label(1), "b");
}

TEST(UndirectedGraph, Induced) {
  UndirectedGraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  std::vector<Vertex> keep{3, 0, 1};
  auto p = c4.induced(keep);
  EXPECT_EQ(p.order(), 3);
  std::vector<Edge> want{{0, 1}, {1, 2}};
  EXPECT_TRUE(std::ranges::equal(p.edges(), want));
}

TEST(TopologicalOrder, SpecExamples) {
  EXPECT_EQ(topological_order({}, 3).order, (std::vector<Vertex>{0, 1, 2}));
  auto t4 = acyclic_tournament(4);
  EXPECT_EQ(topological_order(t4.arcs(), 4).order, (std::vector<Vertex>{0, 1, 2, 3}));
  std::vector<Edge> arcs{{1, 0}, {0, 2}};
  EXPECT_EQ(topological_order(arcs, 3).order, (std::vector<Vertex>{1, 0, 2}));
}

TEST(TopologicalOrder, CycleWitness) {
  std::vector<Edge> arcs{{0, 1}, {1, 2}, {2, 0}};
  auto r = topological_order(arcs, 3);
  EXPECT_FALSE(r.acyclic());
  EXPECT_EQ(r.cycle, (std::vector<Vertex>{0, 1, 2, 0}));
}

namespace {

bool has_cycle_by_permutations(const std::vector<Edge> &arcs, int n) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    perm[i] = i;
  do {
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      pos[perm[i]] = i;
    if (std::all_of(arcs.begin(), arcs.end(), [&](const Edge &a) { return pos[a.u] < pos[a.v]; }))
      return false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return true;
}

} // namespace

TEST(TopologicalOrder, ExhaustiveAgainstPermutationsUpToFour) {
  for (int n = 1; n <= 4; ++n) {
    std::vector<Edge> all;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v)
          all.push_back({u, v});
    for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
      std::vector<Edge> arcs;
      for (std::size_t i = 0; i < all.size(); ++i)
        if ((mask >> i) & 1u)
          arcs.push_back(all[i]);
      auto r = topological_order(arcs, n);
      ASSERT_EQ(!r.acyclic(), has_cycle_by_permutations(arcs, n)) << "n=" << n << " mask=" << mask;
      if (r.acyclic()) {
        std::vector<int> pos(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
          pos[r.order[i]] = i;
        for (const auto &a : arcs)
          ASSERT_LT(pos[a.u], pos[a.v]);
      } else {
        ASSERT_EQ(r.cycle.front(), r.cycle.back());
        for (std::size_t i = 0; i + 1 < r.cycle.size(); ++i)
          ASSERT_NE(std::find(arcs.begin(), arcs.end(), Edge{r.cycle[i], r.cycle[i + 1]}),
                    arcs.end());
      }
    }
  }
}

TEST(AcyclicDigraph, RejectsAntiparallelAndCycles) {
  EXPECT_THROW(AcyclicDigraph(2, {{0, 1}, {1, 0}}), InputError);
  try {
    AcyclicDigraph(3, {{0, 1}, {1, 2}, {2, 0}});
    FAIL() << "expected CycleError";
  } catch (const CycleError &e) {
    EXPECT_EQ(e.witness(), (std::vector<Vertex>{0, 1, 2, 0}));
  }
}

TEST(AcyclicDigraph, ValidatesSuppliedOrder) {
  EXPECT_NO_THROW(AcyclicDigraph(3, {{2, 0}}, {2, 0, 1}, {}));
  EXPECT_THROW(AcyclicDigraph(3, {{2, 0}}, {0, 1, 2}, {}), InputError);
  EXPECT_THROW(AcyclicDigraph(3, {{2, 0}}, {2, 0, 0}, {}), InputError);
}

TEST(AcyclicDigraph, Neighborhoods) {
  AcyclicDigraph d(4, {{0, 2}, {1, 2}, {2, 3}});
  EXPECT_EQ(d.out_degree(2), 1);
  EXPECT_EQ(std::vector<Vertex>(d.in_neighbors(2).begin(), d.in_neighbors(2).end()),
            (std::vector<Vertex>{0, 1}));
  EXPECT_TRUE(d.has_arc(1, 2));
  EXPECT_FALSE(d.has_arc(2, 1));
  EXPECT_EQ(d.underlying().size(), 3u);
}

TEST(Orientation, ConstructionAndConversion) {
  UndirectedGraph p3(3, {{0, 1}, {1, 2}});
  Orientation o(p3);
  EXPECT_FALSE(o.total());
  EXPECT_THROW(o.to_digraph(), InputError);
  o.set(0, Direction::Backward);
  o.set(1, Direction::Forward);
  EXPECT_TRUE(o.total());
  EXPECT_EQ(o.arcs(), (std::vector<Edge>{{1, 0}, {1, 2}}));
  std::vector<Edge> arcs{{1, 0}, {1, 2}};
  EXPECT_EQ(Orientation::from_arcs(p3, arcs), o);
  std::vector<Edge> partial{{1, 0}};
  EXPECT_THROW(Orientation::from_arcs(p3, partial), InputError);
  std::vector<Edge> foreign{{0, 2}, {1, 0}};
  EXPECT_THROW(Orientation::from_arcs(p3, foreign), InputError);
  EXPECT_EQ(Orientation::natural(p3).arcs(), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(Orientation, CyclicToDigraphThrows) {
  UndirectedGraph k3(3, {{0, 1}, {1, 2}, {0, 2}});
  Orientation o(k3, {Direction::Forward, Direction::Backward, Direction::Forward});
  EXPECT_THROW(o.to_digraph(), CycleError);
}

TEST(PathCountMatrix, SaturatesAtMany) {
  // Two routes 0 -> 3 and a direct chord 0 -> 2.
  AcyclicDigraph d(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  PathCountMatrix m(d);
  EXPECT_EQ(m.at(0, 3), PathCount::Many);
  EXPECT_EQ(m.at(0, 1), PathCount::One);
  EXPECT_EQ(m.at(3, 0), PathCount::Zero);
  EXPECT_EQ(m.at(2, 2), PathCount::Zero);
  EXPECT_EQ(m.first_many(), (Edge{0, 3}));
  EXPECT_EQ(PathCountMatrix(acyclic_tournament(3)).at(0, 2), PathCount::Many);
  EXPECT_EQ(PathCountMatrix(AcyclicDigraph(3, {{0, 1}, {1, 2}})).first_many(), std::nullopt);
}

TEST(ConnectedComponents, SpecExamples) {
  UndirectedGraph p3(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(connected_components(p3), (std::vector<std::vector<Vertex>>{{0, 1, 2}}));
  EXPECT_EQ(connected_components(UndirectedGraph(2)),
            (std::vector<std::vector<Vertex>>{{0}, {1}}));
  UndirectedGraph p3i(4, {{0, 1}, {1, 2}});
  EXPECT_EQ(connected_components(p3i), (std::vector<std::vector<Vertex>>{{0, 1, 2}, {3}}));
  EXPECT_TRUE(connected_components(UndirectedGraph(0)).empty());
}
