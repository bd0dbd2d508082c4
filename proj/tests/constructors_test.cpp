#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "shiftgraph/aop.hpp"
#include "shiftgraph/constructors.hpp"
#include "shiftgraph/invariants.hpp"
#include "shiftgraph/oracle.hpp"

using namespace shiftgraph;

namespace {

std::vector<Vertex> as_vector(std::span<const Vertex> s) { return {s.begin(), s.end()}; }

bool all_clauses(const AcyclicDigraph &g) {
  auto l = line_digraph(g);
  return structure::bags_independent(g, l) && structure::adjacency_respects_index(g, l) &&
         structure::unique_larger_bag(g, l) && structure::unique_parent(g, l) &&
         structure::smaller_neighbors_independent(g, l);
}

} // namespace

TEST(Tournament, SpecExamples) {
  EXPECT_EQ(acyclic_tournament(1).order(), 1);
  EXPECT_EQ(acyclic_tournament(1).size(), 0u);
  std::vector<Edge> t3{{0, 1}, {0, 2}, {1, 2}};
  EXPECT_TRUE(std::ranges::equal(acyclic_tournament(3).arcs(), t3));
  EXPECT_EQ(acyclic_tournament(9).size(), 36u);
  EXPECT_THROW(acyclic_tournament(0), InputError);
}

TEST(LineDigraph, OfT3) {
  auto l = line_digraph(acyclic_tournament(3));
  const auto &d = l.digraph;
  ASSERT_EQ(d.order(), 3);
  EXPECT_EQ(d.label(0), "(0,1)");
  EXPECT_EQ(d.label(1), "(0,2)");
  EXPECT_EQ(d.label(2), "(1,2)");
  std::vector<Edge> arcs{{0, 2}};
  EXPECT_TRUE(std::ranges::equal(d.arcs(), arcs));
  EXPECT_EQ(as_vector(l.bags.bag(0)), (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(as_vector(l.bags.bag(1)), (std::vector<Vertex>{2}));
  EXPECT_TRUE(l.bags.bag(2).empty());
  EXPECT_EQ(l.bags.index(2), 1);
}

TEST(LineDigraph, OfT5AndPath) {
  auto u = line_digraph(acyclic_tournament(5)).digraph.underlying();
  EXPECT_EQ(u.order(), 10);
  EXPECT_EQ(u.size(), 10u);
  auto p = line_digraph(AcyclicDigraph(4, {{0, 1}, {1, 2}, {2, 3}})).digraph;
  EXPECT_EQ(p.order(), 3);
  std::vector<Edge> arcs{{0, 1}, {1, 2}};
  EXPECT_TRUE(std::ranges::equal(p.arcs(), arcs));
}

TEST(LineDigraph, UsesParentLabels) {
  AcyclicDigraph g(3, {{0, 1}, {1, 2}}, {"a", "b", "c"});
  auto l = line_digraph(g).digraph;
  EXPECT_EQ(l.label(0), "(a,b)");
  EXPECT_EQ(l.label(1), "(b,c)");
}

TEST(LineDigraph, TopologicalOrderFollowsIndex) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    auto g = oracle::random_acyclic_digraph(rng, 1 + static_cast<int>(rng() % 20), 0.35);
    auto l = line_digraph(g);
    auto topo = l.digraph.topo();
    for (std::size_t p = 0; p + 1 < topo.size(); ++p) {
      int a = l.bags.index(topo[p]), b = l.bags.index(topo[p + 1]);
      ASSERT_TRUE(a < b || (a == b && topo[p] < topo[p + 1]));
    }
  }
}

TEST(LineDigraph, AcyclicForRandomDigraphs) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    auto g = oracle::random_acyclic_digraph(rng, 1 + static_cast<int>(rng() % 20), 0.3);
    auto l = line_digraph(g).digraph;
    // Re-derive acyclicity independently of the stored order.
    ASSERT_TRUE(topological_order(l.arcs(), l.order()).acyclic());
    ASSERT_EQ(l.order(), static_cast<int>(g.size()));
  }
}

TEST(StructureClauses, HoldOnRandomDigraphs) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    auto g = oracle::random_acyclic_digraph(rng, 1 + static_cast<int>(rng() % 12), 0.5);
    ASSERT_TRUE(all_clauses(g)) << "fixture " << i;
  }
  EXPECT_TRUE(all_clauses(acyclic_tournament(8)));
  EXPECT_TRUE(all_clauses(zykov(4).orientation.to_digraph()));
}

TEST(StructureClauses, DetectBrokenDecompositions) {
  auto g = acyclic_tournament(4);
  auto l = line_digraph(g);
  // Moving a vertex into the wrong bag breaks independence and the index rule.
  std::vector<std::vector<Vertex>> bags{{0, 1, 2, 3}, {4, 5}, {}, {}};
  std::vector<int> index{0, 0, 0, 0, 1, 1};
  LineDigraph broken{l.digraph, BagDecomposition(bags, index)};
  EXPECT_FALSE(structure::bags_independent(g, broken));
}

TEST(ShiftGraph, SpecExamples) {
  auto g5 = shift_graph(5, 2);
  EXPECT_EQ(g5.order(), 10);
  EXPECT_EQ(g5.size(), 10u);
  auto g9 = shift_graph(9, 2);
  EXPECT_EQ(g9.order(), 36);
  EXPECT_EQ(g9.size(), 84u);
  EXPECT_EQ(g9.label(0), "(1,2)");
  auto g73 = shift_graph(7, 3);
  auto find = [&](const std::string &label) {
    for (Vertex v = 0; v < g73.order(); ++v)
      if (g73.label(v) == label)
        return v;
    return -1;
  };
  Vertex v = find("(1,2,3)");
  ASSERT_GE(v, 0);
  std::vector<std::string> nbrs;
  for (Vertex w : g73.neighbors(v))
    nbrs.push_back(g73.label(w));
  std::sort(nbrs.begin(), nbrs.end());
  EXPECT_EQ(nbrs, (std::vector<std::string>{"(2,3,4)", "(2,3,5)", "(2,3,6)", "(2,3,7)"}));
}

TEST(ShiftGraph, Preconditions) {
  EXPECT_THROW(shift_graph(2, 2), InputError);
  EXPECT_THROW(shift_graph(6, 3), InputError);
  EXPECT_THROW(shift_graph(5, 1), InputError);
  EXPECT_NO_THROW(shift_graph(3, 2));
}

TEST(ShiftGraph, EqualsLineDigraphOfTournament) {
  for (int n = 3; n <= 12; ++n) {
    auto s = shift_graph(n, 2);
    auto l = line_digraph(acyclic_tournament(n)).digraph.underlying();
    ASSERT_TRUE(std::ranges::equal(s.edges(), l.edges())) << n;
  }
  for (int n = 7; n <= 9; ++n) {
    auto s = shift_graph(n, 3);
    auto l = iterate_line_digraph(acyclic_tournament(n), 2).underlying();
    ASSERT_TRUE(std::ranges::equal(s.edges(), l.edges())) << n;
  }
}

TEST(ShiftGraph, DirectAdjacencyDefinition) {
  // Tuples (a1,a2) ~ (b1,b2) iff a2 == b1 (or vice versa).
  const int n = 8;
  auto s = shift_graph(n, 2);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      for (Vertex p = 0; p < n; ++p)
        for (Vertex q = p + 1; q < n; ++q) {
          bool want = j == p || q == i;
          ASSERT_EQ(s.adjacent(shift_pair_id(n, i, j), shift_pair_id(n, p, q)), want);
        }
}

TEST(Iterate, ZeroIsIdentityAndCapThrows) {
  auto t = acyclic_tournament(5);
  EXPECT_EQ(iterate_line_digraph(t, 0), t);
  EXPECT_THROW(iterate_line_digraph(acyclic_tournament(30), 3, 1000), SizeCapError);
}

TEST(InducedLineSubdigraph, SpecExamples) {
  auto whole = induced_line_subdigraph(acyclic_tournament(6), 6);
  auto image = shift_graph(6, 2).induced(whole.embedding);
  EXPECT_TRUE(std::ranges::equal(whole.line.underlying().edges(), image.edges()));
  EXPECT_EQ(whole.line.order(), 15);

  auto single = induced_line_subdigraph(AcyclicDigraph(4, {{0, 1}}), 4);
  EXPECT_EQ(single.line.order(), 1);
  EXPECT_EQ(single.line.size(), 0u);

  auto path = induced_line_subdigraph(AcyclicDigraph(5, {{0, 1}, {1, 2}}), 5);
  EXPECT_EQ(path.line.order(), 2);
  EXPECT_EQ(path.line.size(), 1u);
  EXPECT_EQ(path.embedding, (std::vector<Vertex>{shift_pair_id(5, 0, 1), shift_pair_id(5, 1, 2)}));

  EXPECT_THROW(induced_line_subdigraph(AcyclicDigraph(4, {{2, 1}}), 4), InputError);
}

TEST(InducedLineSubdigraph, RandomSubdigraphsAreInduced) {
  std::mt19937_64 rng(31);
  auto t8 = acyclic_tournament(8);
  auto s8 = shift_graph(8, 2);
  for (int i = 0; i < 100; ++i) {
    auto sub = oracle::random_subdigraph(rng, t8, 0.5);
    auto r = induced_line_subdigraph(sub, 8);
    auto lu = r.line.underlying();
    auto img = s8.induced(r.embedding);
    ASSERT_TRUE(std::ranges::equal(lu.edges(), img.edges()));
  }
}

TEST(Zykov, SpecExamples) {
  auto z2 = zykov(2);
  EXPECT_EQ(z2.graph.order(), 2);
  EXPECT_EQ(z2.graph.size(), 1u);
  auto z3 = zykov(3);
  EXPECT_EQ(z3.graph.order(), 5);
  EXPECT_EQ(z3.graph.size(), 5u);
  for (Vertex v = 0; v < 5; ++v)
    EXPECT_EQ(z3.graph.degree(v), 2);
  auto z4 = zykov(4);
  EXPECT_EQ(z4.graph.order(), 18);
  EXPECT_EQ(z4.graph.size(), 36u);
  EXPECT_THROW(zykov(0), InputError);
  EXPECT_THROW(zykov(6, 1000), SizeCapError);
}

TEST(Zykov, TriangleFreeWithChromaticNumberN) {
  for (int n = 1; n <= 4; ++n) {
    auto z = zykov(n);
    EXPECT_TRUE(triangle_free(z.graph));
    EXPECT_EQ(chromatic_number(z.graph).first, n);
    EXPECT_TRUE(verify_aop(z.orientation).ok);
  }
}

TEST(Zykov, ApexesAreSinksAndLabelled) {
  auto z = zykov(4);
  auto d = z.orientation.to_digraph();
  int apexes = 0;
  for (Vertex v = 0; v < d.order(); ++v)
    if (d.label(v).starts_with("a")) {
      ++apexes;
      EXPECT_EQ(d.out_degree(v), 0);
      EXPECT_EQ(d.in_neighbors(v).size(), 3u);
    }
  EXPECT_EQ(apexes, 10);
  EXPECT_EQ(d.label(0), "c1.r");
}

TEST(Gadget, SpecExamples) {
  auto g5 = odd_girth_gadget(5);
  EXPECT_EQ(g5.order(), 10);
  EXPECT_EQ(g5.size(), 15u);
  EXPECT_EQ(odd_girth(g5), 5);
  auto g7 = odd_girth_gadget(7);
  EXPECT_EQ(g7.order(), 14);
  EXPECT_EQ(g7.size(), 21u);
  EXPECT_EQ(odd_girth(g7), 7);
}

namespace {

UndirectedGraph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({i, i + 5});
    e.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return UndirectedGraph(10, e);
}

} // namespace

TEST(ThreeEdgePaths, CountsAndFiveCycles) {
  UndirectedGraph c6(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  auto paths = three_edge_paths(c6);
  EXPECT_EQ(paths.size(), 6u);
  for (const auto &p : paths) {
    EXPECT_LT(p.a, p.d);
    EXPECT_FALSE(in_five_cycle(c6, p));
  }
  // Petersen is 3-arc-transitive with 5-cycles, so every 3-edge path is on one.
  auto pg = petersen();
  auto pp = three_edge_paths(pg);
  EXPECT_EQ(pp.size(), 10u * 3 * 2 * 2 / 2);
  for (const auto &p : pp)
    EXPECT_TRUE(in_five_cycle(pg, p));
}

TEST(Girth5, BrinkmannFixture) {
  auto b = brinkmann_graph();
  EXPECT_EQ(b.order(), 21);
  EXPECT_EQ(b.size(), 42u);
  for (Vertex v = 0; v < b.order(); ++v)
    EXPECT_EQ(b.degree(v), 4);
  EXPECT_EQ(girth(b), 5);
  EXPECT_FALSE(k_coloring(b, 3).has_value());
}

TEST(Girth5, Construction) {
  auto b = brinkmann_graph();
  auto h = girth5_non_aop(b);
  EXPECT_EQ(girth(h), 5);
  for (Vertex v = 0; v < b.order(); ++v)
    for (Vertex w : b.neighbors(v))
      EXPECT_TRUE(h.adjacent(v, w));
  for (Vertex v = b.order(); v < h.order(); ++v)
    EXPECT_EQ(h.degree(v), 2);
  for (const auto &p : three_edge_paths(b))
    EXPECT_TRUE(in_five_cycle(h, p));
  EXPECT_EQ(girth5_non_aop(b), h);
}

TEST(Girth5, RejectsBadBase) {
  UndirectedGraph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  EXPECT_THROW(girth5_non_aop(c5), InputError);            // 3-colorable
  EXPECT_THROW(girth5_non_aop(odd_girth_gadget(5)), InputError); // girth 4
}
