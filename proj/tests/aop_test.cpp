#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "shiftgraph/aop.hpp"
#include "shiftgraph/constructors.hpp"
#include "shiftgraph/invariants.hpp"
#include "shiftgraph/oracle.hpp"

using namespace shiftgraph;

namespace {

Orientation random_orientation(std::mt19937_64 &rng, const UndirectedGraph &g) {
  std::vector<Direction> d;
  for (std::size_t e = 0; e < g.size(); ++e)
    d.push_back(rng() & 1u ? Direction::Forward : Direction::Backward);
  return Orientation(g, d);
}

bool is_directed_path(const Orientation &o, const std::vector<Vertex> &p) {
  auto arcs = o.arcs();
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (std::find(arcs.begin(), arcs.end(), Edge{p[i], p[i + 1]}) == arcs.end())
      return false;
  return p.size() >= 2;
}

UndirectedGraph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    e.push_back({i, (i + 1) % n});
  return UndirectedGraph(n, e);
}

} // namespace

TEST(VerifyAop, SpecExamples) {
  UndirectedGraph tree(5, {{0, 1}, {0, 2}, {2, 3}, {2, 4}});
  std::mt19937_64 rng(1);
  for (int i = 0; i < 16; ++i)
    EXPECT_TRUE(verify_aop(random_orientation(rng, tree)).ok);

  auto t3 = acyclic_tournament(3);
  auto r = verify_aop(Orientation::of(t3));
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(r.cycle.empty());
  std::set<std::size_t> lengths{r.first_path.size(), r.second_path.size()};
  EXPECT_EQ(lengths, (std::set<std::size_t>{2, 3}));
  EXPECT_EQ(r.first_path.front(), 0);
  EXPECT_EQ(r.first_path.back(), 2);

  auto z3 = zykov(3).orientation.to_digraph();
  EXPECT_TRUE(verify_aop(Orientation::of(line_digraph(z3).digraph)).ok);

  EXPECT_THROW(verify_aop(Orientation(t3.underlying())), InputError);
  EXPECT_TRUE(verify_aop(Orientation(UndirectedGraph(0))).ok);
}

TEST(VerifyAop, ReportsCycle) {
  auto c4 = cycle(4);
  // Edges (0,1),(0,3),(1,2),(2,3): 0->1->2->3->0.
  Orientation o(c4, {Direction::Forward, Direction::Backward, Direction::Forward, Direction::Forward});
  auto r = verify_aop(o);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.cycle, (std::vector<Vertex>{0, 1, 2, 3, 0}));
}

TEST(VerifyAop, MatchesPathEnumerationWithValidCounterexamples) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    auto g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 7), 0.45);
    if (g.size() > 10)
      continue;
    auto o = random_orientation(rng, g);
    auto r = verify_aop(o);
    ASSERT_EQ(r.ok, oracle::aop_by_path_enumeration(o));
    if (r.ok)
      continue;
    if (!r.cycle.empty()) {
      ASSERT_EQ(r.cycle.front(), r.cycle.back());
      ASSERT_TRUE(is_directed_path(o, r.cycle));
    } else {
      ASSERT_TRUE(is_directed_path(o, r.first_path));
      ASSERT_TRUE(is_directed_path(o, r.second_path));
      ASSERT_NE(r.first_path, r.second_path);
      ASSERT_EQ(r.first_path.front(), r.second_path.front());
      ASSERT_EQ(r.first_path.back(), r.second_path.back());
    }
  }
}

TEST(VerifyAop, LineDigraphPreservesAop) {
  std::mt19937_64 rng(5);
  int seen = 0;
  for (int i = 0; i < 3000 && seen < 200; ++i) {
    auto g = oracle::random_graph(rng, 3 + static_cast<int>(rng() % 8), 0.35);
    auto o = random_orientation(rng, g);
    if (!verify_aop(o).ok)
      continue;
    ++seen;
    auto l = line_digraph(o.to_digraph()).digraph;
    ASSERT_TRUE(verify_aop(Orientation::of(l)).ok);
  }
  EXPECT_GT(seen, 100);
}

TEST(PartialAopState, DetectsCycleAndDoublePath) {
  PartialAopState s(4);
  using R = PartialAopState::Result;
  EXPECT_EQ(s.add(0, 1), R::Ok);
  EXPECT_EQ(s.add(1, 2), R::Ok);
  EXPECT_TRUE(s.reaches(0, 2));
  EXPECT_FALSE(s.reaches(2, 0));
  EXPECT_EQ(s.test(2, 0), R::Cycle);
  EXPECT_EQ(s.test(0, 2), R::DoublePath);
  EXPECT_EQ(s.add(2, 3), R::Ok);
  EXPECT_EQ(s.test(0, 3), R::DoublePath);
  EXPECT_EQ(s.test(3, 1), R::Cycle);
  EXPECT_EQ(s.add(3, 0), R::Cycle);
  EXPECT_FALSE(s.reaches(3, 0));
}

TEST(PartialAopState, PruningIsSound) {
  // A rejected partial orientation has no AOP total extension.
  std::mt19937_64 rng(7);
  int rejected = 0;
  for (int i = 0; i < 400; ++i) {
    auto g = oracle::random_graph(rng, 4 + static_cast<int>(rng() % 6), 0.5);
    if (g.size() < 2)
      continue;
    auto full = random_orientation(rng, g);
    PartialAopState s(g.order());
    std::size_t cut = 0;
    auto arcs = full.arcs();
    bool bad = false;
    for (; cut < arcs.size(); ++cut)
      if (s.add(arcs[cut].u, arcs[cut].v) != PartialAopState::Result::Ok) {
        bad = true;
        break;
      }
    // The prefix accepted so far must itself be AOP.
    UndirectedGraph prefix_graph(g.order(), std::vector<Edge>(arcs.begin(), arcs.begin() + cut));
    ASSERT_TRUE(oracle::aop_by_path_enumeration(
        Orientation::from_arcs(prefix_graph, std::span(arcs).first(cut))));
    if (!bad)
      continue;
    ++rejected;
    for (int t = 0; t < 20; ++t) {
      auto ext = random_orientation(rng, g);
      for (std::size_t e = 0; e <= cut; ++e) {
        auto idx = *g.edge_index(arcs[e].u, arcs[e].v);
        ext.set(idx, arcs[e].u < arcs[e].v ? Direction::Forward : Direction::Backward);
      }
      ASSERT_FALSE(verify_aop(ext).ok);
    }
  }
  EXPECT_GT(rejected, 50);
}

TEST(DecideAop, SpecExamples) {
  auto c4 = decide_aop(cycle(4));
  EXPECT_EQ(c4.status, AopStatus::HasAOP);
  ASSERT_TRUE(c4.witness.has_value());
  EXPECT_TRUE(verify_aop(*c4.witness).ok);

  auto gadget = odd_girth_gadget(5);
  EXPECT_EQ(decide_aop(gadget).status, AopStatus::NoAOP);
  EXPECT_FALSE(oracle::has_aop_by_enumeration(gadget));

  auto k3 = decide_aop(cycle(3));
  EXPECT_EQ(k3.status, AopStatus::NoAOP);
  EXPECT_EQ(k3.stats.nodes, 0u);

  EXPECT_EQ(decide_aop(UndirectedGraph(0)).status, AopStatus::HasAOP);
  EXPECT_EQ(decide_aop(shift_graph(9, 2)).status, AopStatus::NoAOP);
}

TEST(DecideAop, MatchesEnumeration) {
  std::mt19937_64 rng(11);
  int yes = 0, no = 0;
  for (int i = 0; i < 400; ++i) {
    auto g = oracle::random_graph(rng, 3 + static_cast<int>(rng() % 8), 0.3 + 0.3 * (i % 3));
    if (g.size() > 16)
      continue;
    bool want = oracle::has_aop_by_enumeration(g);
    for (bool propagate : {true, false}) {
      AopBudget b;
      b.propagate = propagate;
      auto v = decide_aop(g, b);
      ASSERT_EQ(v.status, want ? AopStatus::HasAOP : AopStatus::NoAOP) << i;
      if (v.witness)
        ASSERT_TRUE(verify_aop(*v.witness).ok);
    }
    (want ? yes : no)++;
  }
  EXPECT_GT(yes, 20);
  EXPECT_GT(no, 20);
}

TEST(DecideAop, TriangleFreeNonAopFixtures) {
  // Triangle-free graphs with |E| <= 16 and no AOP orientation.
  for (auto g : {odd_girth_gadget(5), shift_graph(5, 2)}) {
    if (g.size() > 16)
      continue;
    ASSERT_TRUE(triangle_free(g));
    EXPECT_EQ(decide_aop(g).status == AopStatus::HasAOP, oracle::has_aop_by_enumeration(g));
  }
}

TEST(DecideAop, ThreadCountDoesNotChangeResult) {
  std::vector<UndirectedGraph> graphs{shift_graph(6, 2), shift_graph(7, 2), shift_graph(8, 2),
                                      shift_graph(9, 2), odd_girth_gadget(7),
                                      zykov(4).graph, brinkmann_graph()};
  for (const auto &g : graphs) {
    auto one = decide_aop(g);
    for (int t : {2, 3, 8}) {
      AopBudget b;
      b.threads = t;
      auto many = decide_aop(g, b);
      ASSERT_EQ(many.status, one.status);
      if (one.witness)
        ASSERT_EQ(*many.witness, *one.witness);
    }
  }
}

TEST(DecideAop, BudgetYieldsTimeout) {
  AopBudget b;
  b.max_nodes = 100;
  b.propagate = false;
  auto v = decide_aop(shift_graph(9, 2), b);
  EXPECT_EQ(v.status, AopStatus::Timeout);
  EXPECT_FALSE(v.witness.has_value());
  b.threads = 4;
  EXPECT_EQ(decide_aop(shift_graph(9, 2), b).status, AopStatus::Timeout);

  AopBudget t;
  t.max_seconds = 0.0;
  t.max_nodes = 1'000'000'000;
  t.propagate = false;
  EXPECT_NE(decide_aop(shift_graph(12, 2), t).status, AopStatus::HasAOP);
}

TEST(DecideAop, BranchingOrder) {
  UndirectedGraph star_tail(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
  auto order = aop_branching_order(star_tail);
  // Degree sums: (0,1)=4, (0,2)=4, (0,3)=5, (3,4)=3.
  EXPECT_EQ(order, (std::vector<std::size_t>{2, 0, 1, 3}));
}

TEST(DecideAop, SmallShiftGraphsHaveVerifiedWitnesses) {
  for (int n = 5; n <= 8; ++n) {
    auto v = decide_aop(shift_graph(n, 2));
    if (v.status == AopStatus::HasAOP)
      EXPECT_TRUE(verify_aop(*v.witness).ok);
  }
  EXPECT_FALSE(shift_graph_contains_g92(8));
  EXPECT_TRUE(shift_graph_contains_g92(10));
}

TEST(CycleLemma, SpecExamples) {
  EXPECT_TRUE(cycle_orientation_lemma_check(4));
  EXPECT_TRUE(cycle_orientation_lemma_check(5));
  EXPECT_TRUE(cycle_orientation_lemma_check(8));
  for (int k = 4; k <= 12; ++k)
    EXPECT_TRUE(cycle_orientation_lemma_check(k)) << k;
  EXPECT_THROW(cycle_orientation_lemma_check(3), InputError);
}

TEST(CycleLemma, AgreesWithVerifyAop) {
  // With a directed path of k - 2 edges, an orientation of C_k is either
  // cyclic or has two paths between one pair, so it is never AOP.
  for (int k = 4; k <= 10; ++k) {
    auto c = cycle(k);
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      std::vector<Edge> arcs;
      for (int i = 0; i < k; ++i) {
        Vertex j = (i + 1) % k;
        arcs.push_back((mask >> i) & 1u ? Edge{i, j} : Edge{j, i});
      }
      auto o = Orientation::from_arcs(c, arcs);
      auto r = verify_aop(o);
      bool acyclic = r.ok || r.cycle.empty();
      ASSERT_EQ(acyclic, mask != 0 && mask != (1u << k) - 1);
      int longest = 0;
      for (int st = 0; st < k; ++st)
        for (bool dir : {true, false}) {
          int run = 0;
          while (run < k && (((mask >> ((st + run) % k)) & 1u) != 0) == dir)
            ++run;
          longest = std::max(longest, run);
        }
      if (longest >= k - 2)
        ASSERT_FALSE(r.ok) << "k=" << k << " mask=" << mask;
    }
  }
}

TEST(Pipeline, SpecExamples) {
  auto a = aop_pipeline_check(3, 1);
  EXPECT_TRUE(a.aop);
  EXPECT_TRUE(!a.odd_girth || *a.odd_girth >= 5);
  EXPECT_TRUE(a.passed);

  auto b = aop_pipeline_check(4, 1);
  EXPECT_EQ(b.vertices, 36);
  EXPECT_TRUE(b.aop);
  EXPECT_TRUE(b.passed);
  ASSERT_TRUE(b.chromatic_number.has_value());
  EXPECT_GE(*b.chromatic_number, 2);

  auto c = aop_pipeline_check(2, 0);
  EXPECT_EQ(c.vertices, 2);
  EXPECT_TRUE(c.aop);
  EXPECT_EQ(c.chromatic_number, 2);

  EXPECT_TRUE(aop_pipeline_check(3, 2).passed);
  EXPECT_TRUE(aop_pipeline_check(5, 1).aop);
  EXPECT_THROW(aop_pipeline_check(3, -1), InputError);
}
