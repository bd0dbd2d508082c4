#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shiftgraph/graph.hpp"

namespace shiftgraph {

/// Outcome of checking one total orientation for the AOP property
/// (acyclic, at most one directed path between any ordered pair).
struct AopCheck {
  bool ok = false;
  /// Closed directed cycle, when the orientation is cyclic.
  std::vector<Vertex> cycle;
  /// Two distinct directed paths with the same ends, when acyclic but not AOP.
  std::vector<Vertex> first_path;
  std::vector<Vertex> second_path;
};

/// Throws InputError for a partial orientation.
AopCheck verify_aop(const Orientation &o);

enum class AopStatus { HasAOP, NoAOP, Timeout };

std::string to_string(AopStatus s);

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t cycle_prunes = 0;
  std::uint64_t double_path_prunes = 0;
  std::uint64_t forced = 0;
  double seconds = 0.0;
};

struct AopBudget {
  std::uint64_t max_nodes = 10'000'000;
  /// Wall-clock limit; none by default.
  std::optional<double> max_seconds;
  int threads = 1;
  /// Orient edges that have a single feasible direction before branching.
  bool propagate = true;
};

struct AopVerdict {
  AopStatus status = AopStatus::Timeout;
  std::optional<Orientation> witness;
  SearchStats stats;
};

/// Backtracking over edge orientations, pruning partial orientations that
/// already contain a directed cycle or two directed paths between one pair.
/// Edges are branched in decreasing order of endpoint degree sum; the first
/// branched edge is only tried Forward (reversal symmetry). Graphs with a
/// triangle are rejected before searching. The verdict and witness do not
/// depend on `budget.threads`.
AopVerdict decide_aop(const UndirectedGraph &g, const AopBudget &budget = {});

/// Static branching order used by decide_aop (edge indices).
std::vector<std::size_t> aop_branching_order(const UndirectedGraph &g);

/// Incremental AOP state: reachability over the edges oriented so far.
/// Exposed for tests of pruning soundness.
class PartialAopState {
public:
  enum class Result { Ok, Cycle, DoublePath };

  explicit PartialAopState(int n);

  /// Would adding u -> v keep the oriented part acyclic with unique paths?
  Result test(Vertex u, Vertex v) const;
  /// test() and, if Ok, records the arc.
  Result add(Vertex u, Vertex v);
  bool reaches(Vertex from, Vertex to) const;

private:
  int n_;
  int words_;
  std::vector<std::uint64_t> reach_;
  std::vector<std::uint64_t> reached_by_;
};

/// Exhaustive check, over all 2^k orientations of C_k that contain a
/// directed path with k - 2 edges, that acyclicity is equivalent to having
/// a pair of vertices joined by two disjoint directed paths. Requires k >= 4.
bool cycle_orientation_lemma_check(int k);

struct AopPipelineReport {
  int n = 0;
  int iterations = 0;
  int vertices = 0;
  std::size_t edges = 0;
  bool aop = false;
  std::optional<int> odd_girth; ///< nullopt = infinite
  int odd_girth_bound = 0;      ///< 2g + 3
  std::optional<int> chromatic_number;
  bool passed = false;
};

/// Builds L^g(Z_n) with the orientation inherited through the iteration and
/// checks AOP, odd girth >= 2g + 3 and (when small enough) the exact
/// chromatic number.
AopPipelineReport aop_pipeline_check(int n, int g,
                                     std::size_t cap = kDefaultSizeCap,
                                     int chromatic_cap = 100);

/// Subgraph-containment shortcut: G_{n,2} for n >= 9 contains G_{9,2}, so a
/// refutation for n = 9 covers it. True when n >= 9.
bool shift_graph_contains_g92(int n);

} // namespace shiftgraph
