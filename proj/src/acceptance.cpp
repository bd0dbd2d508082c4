#include "shiftgraph/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "shiftgraph/aop.hpp"
#include "shiftgraph/coloring.hpp"
#include "shiftgraph/constructors.hpp"
#include "shiftgraph/invariants.hpp"
#include "shiftgraph/oracle.hpp"

namespace shiftgraph::acceptance {

namespace {

std::string show(const Length &l) { return l ? std::to_string(*l) : "inf"; }

// Counts failures over a batch and keeps the first one for the report.
class Tally {
public:
  void record(bool ok, const std::string &what) {
    ++total_;
    if (!ok && failures_++ == 0)
      first_ = what;
  }
  Check check(const std::string &name) const {
    std::ostringstream out;
    out << total_ << " cases, " << failures_ << " violations";
    if (failures_)
      out << " (first: " << first_ << ")";
    return {name, failures_ == 0 && total_ > 0, out.str()};
  }

private:
  int total_ = 0;
  int failures_ = 0;
  std::string first_;
};

std::vector<AcyclicDigraph> sandwich_fixtures() {
  std::mt19937_64 rng(4004);
  std::uniform_int_distribution<int> size(2, 10);
  std::uniform_real_distribution<double> density(0.2, 0.8);
  std::vector<AcyclicDigraph> out;
  for (int i = 0; i < 100; ++i) {
    int n = size(rng);
    out.push_back(oracle::random_acyclic_digraph(rng, n, density(rng)));
  }
  return out;
}

int ceil_log2(int x) {
  int k = 0;
  while ((1 << k) < x)
    ++k;
  return k;
}

} // namespace

bool all_passed(const Report &r) {
  return !r.empty() &&
         std::all_of(r.begin(), r.end(), [](const Check &c) { return c.passed; });
}

Report shift_identity() {
  Tally t;
  for (int n = 3; n <= 12; ++n) {
    auto s = shift_graph(n, 2);
    auto tn = acyclic_tournament(n);
    auto l = line_digraph(tn).digraph.underlying();
    bool ids = true;
    for (std::size_t x = 0; x < tn.arcs().size(); ++x)
      ids = ids && shift_pair_id(n, tn.arcs()[x].u, tn.arcs()[x].v) == static_cast<Vertex>(x);
    bool same = ids && s.order() == l.order() &&
                std::equal(s.edges().begin(), s.edges().end(), l.edges().begin(), l.edges().end());
    t.record(same, "n=" + std::to_string(n));
  }
  return {t.check("shift_graph(n,2) == L(T_n) for 3 <= n <= 12")};
}

Report structure_observations() {
  std::mt19937_64 rng(2002);
  std::uniform_int_distribution<int> size(1, 12);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  Tally clause[5];
  for (int i = 0; i < 500; ++i) {
    auto g = oracle::random_acyclic_digraph(rng, size(rng), density(rng));
    auto l = line_digraph(g);
    std::string tag = "fixture " + std::to_string(i);
    clause[0].record(structure::bags_independent(g, l), tag);
    clause[1].record(structure::adjacency_respects_index(g, l), tag);
    clause[2].record(structure::unique_larger_bag(g, l), tag);
    clause[3].record(structure::unique_parent(g, l), tag);
    clause[4].record(structure::smaller_neighbors_independent(g, l), tag);
  }
  return {clause[0].check("(i) bags independent"),
          clause[1].check("(ii) adjacency respects index"),
          clause[2].check("(iii) larger neighbors in one bag"),
          clause[3].check("(iv) unique parent sees whole bag"),
          clause[4].check("(v) smaller neighbors non-adjacent")};
}

Report odd_girth_lift() {
  std::mt19937_64 rng(3003);
  std::uniform_int_distribution<int> size(3, 12);
  std::uniform_real_distribution<double> density(0.2, 0.9);
  Tally lift;
  int found = 0;
  while (found < 200) {
    auto g = oracle::random_acyclic_digraph(rng, size(rng), density(rng));
    auto base = odd_girth(g.underlying());
    if (!base)
      continue;
    ++found;
    auto lifted = odd_girth(line_digraph(g).digraph.underlying());
    lift.record(!lifted || *lifted >= *base + 2,
                "og(G)=" + std::to_string(*base) + " og(L)=" + show(lifted));
  }
  Tally iterated;
  std::uniform_int_distribution<int> small(3, 8);
  for (int i = 0; i < 60; ++i) {
    auto g = oracle::random_acyclic_digraph(rng, small(rng), density(rng));
    auto current = g;
    for (int k = 1; k <= 3; ++k) {
      current = line_digraph(current).digraph;
      auto og = odd_girth(current.underlying());
      iterated.record(!og || *og >= 2 * k + 1,
                      "g=" + std::to_string(k) + " og=" + show(og));
    }
  }
  return {lift.check("odd_girth(L(G)) >= odd_girth(G) + 2 (200 digraphs)"),
          iterated.check("odd_girth(L^g(G)) >= 2g + 1 for g <= 3")};
}

Report chromatic_sandwich() {
  Tally t;
  for (const auto &g : sandwich_fixtures()) {
    int chi_g = chromatic_number(g.underlying()).first;
    int chi_l = chromatic_number(line_digraph(g).digraph.underlying()).first;
    bool lower = std::log2(static_cast<double>(chi_g)) <= chi_l + 1e-9;
    bool upper = chi_l <= k_star(chi_g);
    t.record(lower && upper, "chi(G)=" + std::to_string(chi_g) +
                                 " chi(L)=" + std::to_string(chi_l));
  }
  return {t.check("log2 chi(G) <= chi(L(G)) <= k*(chi(G)) (100 digraphs)")};
}

Report log_coloring() {
  Tally log_palette, lift_palette;
  for (const auto &g : sandwich_fixtures()) {
    auto base = chromatic_number(g.underlying()).second;
    auto line = line_digraph(g).digraph.underlying();
    auto c = log_color_line_digraph(g, base);
    int want = k_star(base.colors_used());
    log_palette.record(is_proper(line, c.colors()) && c.palette() == want,
                       "palette " + std::to_string(c.palette()) + " vs k*=" +
                           std::to_string(want));
    auto lc = chromatic_number(line).second;
    auto up = lift_coloring(g, lc);
    int t = lc.palette();
    bool bounded = t >= 31 || up.palette() <= (1 << t) - 1 + 1;
    lift_palette.record(is_proper(g.underlying(), up.colors()) && bounded,
                        "lift palette " + std::to_string(up.palette()) + " from t=" +
                            std::to_string(t));
  }
  return {log_palette.check("log-coloring proper with palette k*(c)"),
          lift_palette.check("lift coloring proper with palette <= 2^t - 1 + 1")};
}

namespace {

void audit_kab(const AcyclicDigraph &t_prime, int a, int b, Tally &proper,
               Tally &bounds, Tally &witness, const std::string &tag) {
  auto r = color_kab_free(t_prime, a, b);
  auto h = r.line.digraph.underlying();
  proper.record(is_proper(h, r.coloring.colors()), tag);
  if (is_kab_free(h, a, b)) {
    bool ok = r.report.left_colors <= b && r.report.right_colors <= a &&
              r.report.final_palette <= k_star(a + b);
    bounds.record(ok, tag + " L=" + std::to_string(r.report.left_colors) +
                          " R=" + std::to_string(r.report.right_colors) +
                          " final=" + std::to_string(r.report.final_palette));
  }
  if (!r.report.within_bounds) {
    const auto &w = r.report.witness;
    witness.record(w && static_cast<int>(w->left.size()) == a &&
                       static_cast<int>(w->right.size()) == b &&
                       is_induced_kab(h, w->left, w->right),
                   tag);
  }
}

} // namespace

Report kab_pipeline() {
  Tally proper, bounds, witness;
  std::mt19937_64 rng(6006);
  std::uniform_real_distribution<double> density(0.2, 1.0);
  std::uniform_int_distribution<int> param(1, 3);
  auto t7 = acyclic_tournament(7);
  for (int i = 0; i < 1000; ++i) {
    auto sub = oracle::random_subdigraph(rng, t7, density(rng));
    int a = param(rng), b = param(rng);
    audit_kab(sub, a, b, proper, bounds, witness,
              "T7 sample " + std::to_string(i) + " a=" + std::to_string(a) +
                  " b=" + std::to_string(b));
  }
  for (int n = 2; n <= 9; ++n)
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b)
        audit_kab(acyclic_tournament(n), a, b, proper, bounds, witness,
                  "T" + std::to_string(n) + " a=" + std::to_string(a) +
                      " b=" + std::to_string(b));
  auto w = witness.check("over-bound runs carry a verified induced K_{a,b}");
  return {proper.check("coloring of H proper"),
          bounds.check("promise holds => L <= b, R <= a, final <= k*(a+b)"), w};
}

Report kab_single(int n, int a, int b) {
  auto r = color_kab_free(acyclic_tournament(n), a, b);
  auto h = r.line.digraph.underlying();
  const auto &rep = r.report;
  Report out;
  out.push_back({"coloring of H proper", is_proper(h, r.coloring.colors()),
                 std::to_string(h.order()) + " vertices, palette " +
                     std::to_string(rep.final_palette)});
  std::ostringstream sides;
  sides << "L-side " << rep.left_side.size() << " vertices / " << rep.left_colors
        << " colors, R-side " << rep.right_side.size() << " vertices / "
        << rep.right_colors << " colors, base " << rep.base_colors << ", k* "
        << rep.k_star;
  bool free = is_kab_free(h, a, b);
  if (free) {
    out.push_back({"palettes within L <= b, R <= a, final <= k*(a+b)",
                   rep.left_colors <= b && rep.right_colors <= a &&
                       rep.final_palette <= k_star(a + b),
                   sides.str()});
  } else {
    out.push_back({"H contains an induced K_{a,b}; bounds not promised", true, sides.str()});
  }
  if (rep.witness) {
    std::ostringstream w;
    w << "center " << rep.witness->center << ", left {";
    for (std::size_t i = 0; i < rep.witness->left.size(); ++i)
      w << (i ? ", " : "") << h.label(rep.witness->left[i]);
    w << "}, right {";
    for (std::size_t i = 0; i < rep.witness->right.size(); ++i)
      w << (i ? ", " : "") << h.label(rep.witness->right[i]);
    w << "}";
    out.push_back({"witness is an induced K_{a,b}",
                   is_induced_kab(h, rep.witness->left, rep.witness->right), w.str()});
  } else if (!rep.within_bounds) {
    out.push_back({"witness is an induced K_{a,b}", false, "missing"});
  }
  return out;
}

Report cycle_lemma(int lo, int hi) {
  Report out;
  for (int k = lo; k <= hi; ++k)
    out.push_back({"k=" + std::to_string(k), cycle_orientation_lemma_check(k),
                   std::to_string(1 << k) + " orientations"});
  return out;
}

Report gadget_non_aop() {
  Report out;
  for (int g : {5, 7}) {
    auto h = odd_girth_gadget(g);
    auto og = odd_girth(h);
    std::string tag = "gadget(" + std::to_string(g) + ")";
    out.push_back({tag + " odd girth", og && *og == g, "odd_girth=" + show(og)});
    auto v = decide_aop(h);
    out.push_back({tag + " decide_aop", v.status == AopStatus::NoAOP,
                   to_string(v.status) + " after " + std::to_string(v.stats.nodes) + " nodes"});
    bool brute = oracle::has_aop_by_enumeration(h);
    out.push_back({tag + " enumeration of 2^" + std::to_string(h.size()) + " orientations",
                   !brute, brute ? "found an AOP orientation" : "none is AOP"});
  }
  return out;
}

Report zykov_single(int n, int g) {
  auto r = aop_pipeline_check(n, g);
  std::string size = std::to_string(r.vertices) + " vertices, " +
                     std::to_string(r.edges) + " edges";
  Report out{{"verify_aop(L^" + std::to_string(g) + "(Z" + std::to_string(n) + "))", r.aop, size},
             {"odd_girth >= " + std::to_string(r.odd_girth_bound),
              !r.odd_girth || *r.odd_girth >= r.odd_girth_bound,
              "odd_girth=" + show(r.odd_girth)}};
  if (r.chromatic_number)
    out.push_back({"exact chromatic number", true, "chi=" + std::to_string(*r.chromatic_number)});
  return out;
}

Report zykov_pipeline() {
  Report out;
  for (int n = 1; n <= 5; ++n) {
    auto z = zykov(n);
    out.push_back({"verify_aop(Z" + std::to_string(n) + ")", verify_aop(z.orientation).ok,
                   std::to_string(z.graph.order()) + " vertices"});
  }
  for (auto [n, g] : {std::pair{3, 1}, {3, 2}, {4, 1}})
    for (auto &c : zykov_single(n, g))
      if (c.name != "exact chromatic number")
        out.push_back({"(n=" + std::to_string(n) + ", g=" + std::to_string(g) + ") " + c.name,
                       c.passed, c.detail});
  auto z4 = zykov(4);
  int chi_z = chromatic_number(z4.graph).first;
  auto line = line_digraph(z4.orientation.to_digraph()).digraph.underlying();
  int chi_l = chromatic_number(line).first;
  out.push_back({"chi(L(Z4)) >= log2 chi(Z4)", chi_l >= ceil_log2(chi_z),
                 "chi(Z4)=" + std::to_string(chi_z) + " chi(L)=" + std::to_string(chi_l)});
  return out;
}

Report girth5_construction() {
  auto g0 = brinkmann_graph();
  auto gg = girth(g0);
  int chi = chromatic_number(g0).first;
  auto h = girth5_non_aop(g0);
  auto gh = girth(h);
  Tally covered;
  for (const auto &p : three_edge_paths(g0))
    covered.record(in_five_cycle(h, p), std::to_string(p.a) + "-" + std::to_string(p.b) +
                                            "-" + std::to_string(p.c) + "-" +
                                            std::to_string(p.d));
  return {{"fixture girth 5", gg && *gg == 5, "girth=" + show(gg)},
          {"fixture chromatic number 4", chi == 4, "chi=" + std::to_string(chi)},
          {"output girth exactly 5", gh && *gh == 5,
           std::to_string(h.order()) + " vertices, " + std::to_string(h.size()) +
               " edges, girth=" + show(gh)},
          covered.check("every 3-edge path of the fixture lies on a 5-cycle")};
}

Report g92_non_aop(std::uint64_t budget, int threads) {
  AopBudget b;
  b.max_nodes = budget;
  b.threads = threads;
  auto v = decide_aop(shift_graph(9, 2), b);
  std::ostringstream s;
  s << to_string(v.status) << " after " << v.stats.nodes << " nodes ("
    << v.stats.cycle_prunes << " cycle prunes, " << v.stats.double_path_prunes
    << " double-path prunes, " << v.stats.forced << " forced)";
  return {{"decide_aop(G_{9,2}) = NoAOP", v.status == AopStatus::NoAOP, s.str()},
          {"G_{n,2} for n >= 9 contains G_{9,2}",
           shift_graph_contains_g92(9) && shift_graph_contains_g92(12) &&
               !shift_graph_contains_g92(8),
           "subgraph containment"}};
}

Report oracle_equivalences() {
  std::mt19937_64 rng(1212);
  Tally paths, chi, degen;
  std::uniform_int_distribution<int> size(1, 8);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  for (int i = 0; i < 400; ++i) {
    auto g = oracle::random_graph(rng, size(rng), density(rng));
    if (g.size() > 10)
      continue;
    std::vector<Direction> dirs;
    std::bernoulli_distribution coin(0.5);
    for (std::size_t e = 0; e < g.size(); ++e)
      dirs.push_back(coin(rng) ? Direction::Forward : Direction::Backward);
    Orientation o(g, dirs);
    paths.record(verify_aop(o).ok == oracle::aop_by_path_enumeration(o),
                 "orientation " + std::to_string(i));
  }
  for (int i = 0; i < 300; ++i) {
    auto g = oracle::random_graph(rng, size(rng), density(rng));
    chi.record(chromatic_number(g).first == oracle::chromatic_by_enumeration(g),
               "graph " + std::to_string(i));
  }
  std::uniform_int_distribution<int> mid(1, 15);
  for (int i = 0; i < 200; ++i) {
    auto g = oracle::random_graph(rng, mid(rng), density(rng));
    degen.record(degeneracy(g).degeneracy == oracle::degeneracy_by_subsets(g),
                 "graph " + std::to_string(i));
  }
  return {paths.check("verify_aop vs path enumeration (<= 10 edges)"),
          chi.check("chromatic_number vs coloring enumeration (<= 8 vertices)"),
          degen.check("degeneracy vs subset min-degree (<= 15 vertices)")};
}

} // namespace shiftgraph::acceptance
