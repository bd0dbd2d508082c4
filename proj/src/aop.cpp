#include "shiftgraph/aop.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

#include "shiftgraph/constructors.hpp"
#include "shiftgraph/coloring.hpp"
#include "shiftgraph/invariants.hpp"

namespace shiftgraph {

namespace {

// Two distinct directed paths from `s` to `t`, given saturated counts of
// paths from s (count[s] unused).
class PathRecovery {
public:
  PathRecovery(const AcyclicDigraph &d, Vertex s, const std::vector<std::uint8_t> &count)
      : d_(d), s_(s), count_(count) {}

  std::pair<std::vector<Vertex>, std::vector<Vertex>> two(Vertex t) const {
    std::vector<Vertex> live;
    for (Vertex w : d_.in_neighbors(t))
      if (reach(w) >= 1)
        live.push_back(w);
    if (live.size() >= 2) {
      auto p = one(live[0]);
      auto q = one(live[1]);
      p.push_back(t);
      q.push_back(t);
      return {p, q};
    }
    for (Vertex w : live)
      if (reach(w) >= 2) {
        auto [p, q] = two(w);
        p.push_back(t);
        q.push_back(t);
        return {p, q};
      }
    throw InvariantError("path count says Many but no two paths found");
  }

  std::vector<Vertex> one(Vertex t) const {
    std::vector<Vertex> path{t};
    while (t != s_) {
      for (Vertex w : d_.in_neighbors(t))
        if (reach(w) >= 1) {
          t = w;
          break;
        }
      path.push_back(t);
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

private:
  int reach(Vertex w) const { return w == s_ ? 1 : count_[w]; }

  const AcyclicDigraph &d_;
  Vertex s_;
  const std::vector<std::uint8_t> &count_;
};

} // namespace

AopCheck verify_aop(const Orientation &o) {
  if (!o.total())
    throw InputError("verify_aop needs a total orientation");
  const int n = o.base().order();
  auto arcs = o.arcs();
  auto topo = topological_order(arcs, n);
  AopCheck check;
  if (!topo.acyclic()) {
    check.cycle = std::move(topo.cycle);
    return check;
  }
  AcyclicDigraph d(n, std::move(arcs), std::move(topo.order), o.base().labels());
  std::vector<std::uint8_t> count(static_cast<std::size_t>(n));
  auto order = d.topo();
  for (Vertex s = 0; s < n; ++s) {
    std::fill(count.begin(), count.end(), 0);
    Vertex many = -1;
    for (int i = d.position(s) + 1; i < n; ++i) {
      Vertex v = order[i];
      int sum = 0;
      for (Vertex w : d.in_neighbors(v))
        sum += w == s ? 1 : count[w];
      count[v] = static_cast<std::uint8_t>(std::min(sum, 2));
      if (count[v] == 2 && (many < 0 || v < many))
        many = v;
    }
    if (many >= 0) {
      auto [p, q] = PathRecovery(d, s, count).two(many);
      check.first_path = std::move(p);
      check.second_path = std::move(q);
      return check;
    }
  }
  check.ok = true;
  return check;
}

std::string to_string(AopStatus s) {
  switch (s) {
  case AopStatus::HasAOP:
    return "HasAOP";
  case AopStatus::NoAOP:
    return "NoAOP";
  case AopStatus::Timeout:
    return "Timeout";
  }
  return "?";
}

PartialAopState::PartialAopState(int n)
    : n_(n), words_((n + 63) / 64),
      reach_(static_cast<std::size_t>(n) * words_, 0),
      reached_by_(static_cast<std::size_t>(n) * words_, 0) {}

bool PartialAopState::reaches(Vertex from, Vertex to) const {
  return (reach_[static_cast<std::size_t>(from) * words_ + to / 64] >> (to % 64)) & 1u;
}

PartialAopState::Result PartialAopState::test(Vertex u, Vertex v) const {
  if (u == v || reaches(v, u))
    return Result::Cycle;
  // Ancestors A = {u} + reached_by(u), descendants D = {v} + reach(v).
  // The arc creates a second path iff some x in A already reaches some y in D.
  const std::uint64_t *down = &reach_[static_cast<std::size_t>(v) * words_];
  const std::uint64_t *up = &reached_by_[static_cast<std::size_t>(u) * words_];
  auto hits = [&](Vertex x) {
    const std::uint64_t *row = &reach_[static_cast<std::size_t>(x) * words_];
    if ((row[v / 64] >> (v % 64)) & 1u)
      return true;
    for (int w = 0; w < words_; ++w)
      if (row[w] & down[w])
        return true;
    return false;
  };
  if (hits(u))
    return Result::DoublePath;
  for (int w = 0; w < words_; ++w)
    for (std::uint64_t bits = up[w]; bits; bits &= bits - 1) {
      Vertex x = w * 64 + std::countr_zero(bits);
      if (hits(x))
        return Result::DoublePath;
    }
  return Result::Ok;
}

PartialAopState::Result PartialAopState::add(Vertex u, Vertex v) {
  auto r = test(u, v);
  if (r != Result::Ok)
    return r;
  std::vector<std::uint64_t> down(reach_.begin() + static_cast<std::ptrdiff_t>(v) * words_,
                                  reach_.begin() + static_cast<std::ptrdiff_t>(v + 1) * words_);
  down[v / 64] |= std::uint64_t{1} << (v % 64);
  std::vector<std::uint64_t> up(reached_by_.begin() + static_cast<std::ptrdiff_t>(u) * words_,
                                reached_by_.begin() + static_cast<std::ptrdiff_t>(u + 1) * words_);
  up[u / 64] |= std::uint64_t{1} << (u % 64);
  for (int w = 0; w < words_; ++w)
    for (std::uint64_t bits = up[w]; bits; bits &= bits - 1) {
      Vertex x = w * 64 + std::countr_zero(bits);
      for (int k = 0; k < words_; ++k)
        reach_[static_cast<std::size_t>(x) * words_ + k] |= down[k];
    }
  for (int w = 0; w < words_; ++w)
    for (std::uint64_t bits = down[w]; bits; bits &= bits - 1) {
      Vertex y = w * 64 + std::countr_zero(bits);
      for (int k = 0; k < words_; ++k)
        reached_by_[static_cast<std::size_t>(y) * words_ + k] |= up[k];
    }
  return Result::Ok;
}

std::vector<std::size_t> aop_branching_order(const UndirectedGraph &g) {
  std::vector<std::size_t> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  auto edges = g.edges();
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return g.degree(edges[a].u) + g.degree(edges[a].v) >
           g.degree(edges[b].u) + g.degree(edges[b].v);
  });
  return order;
}

namespace {

using Clock = std::chrono::steady_clock;

struct SharedControl {
  std::uint64_t max_nodes;
  std::optional<Clock::time_point> deadline;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> out_of_budget{false};
  // Smallest subproblem index known to hold a witness.
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
};

class Search {
public:
  Search(const UndirectedGraph &g, const std::vector<std::size_t> &order,
         bool propagate, SharedControl &control, std::size_t ticket)
      : g_(g), order_(order), propagate_(propagate), control_(control),
        ticket_(ticket), dirs_(g.size(), Direction::Unset),
        states_(g.size() + 1, PartialAopState(g.order())) {}

  /// Restores a prefix assignment (already propagated and consistent).
  void load(const std::vector<Direction> &dirs) {
    dirs_ = dirs;
    auto edges = g_.edges();
    for (std::size_t e = 0; e < dirs_.size(); ++e)
      if (dirs_[e] != Direction::Unset) {
        auto [u, v] = arc(edges[e], dirs_[e]);
        if (states_[0].add(u, v) != PartialAopState::Result::Ok)
          throw InvariantError("inconsistent search prefix");
      }
  }

  /// Depth-first search. With split_depth set, records the assignments
  /// reached at that depth instead of descending further.
  bool run(bool first_forward_only, std::optional<int> split_depth = std::nullopt) {
    first_forward_only_ = first_forward_only;
    split_depth_ = split_depth;
    return dfs(0, 0);
  }

  bool aborted() const { return aborted_; }
  const std::vector<Direction> &solution() const { return solution_; }
  const std::vector<std::vector<Direction>> &frontier() const { return frontier_; }
  const SearchStats &stats() const { return stats_; }

private:
  using Result = PartialAopState::Result;

  static Edge arc(const Edge &e, Direction d) {
    return d == Direction::Forward ? e : Edge{e.v, e.u};
  }

  bool over_budget() {
    if ((stats_.nodes & 1023) != 0)
      return aborted_;
    std::uint64_t total = control_.nodes.fetch_add(1024) + 1024;
    if (total > control_.max_nodes ||
        (control_.deadline && Clock::now() > *control_.deadline)) {
      control_.out_of_budget = true;
    }
    if (control_.out_of_budget || control_.best.load() < ticket_)
      aborted_ = true;
    return aborted_;
  }

  void count_prune(Result r) {
    if (r == Result::Cycle)
      ++stats_.cycle_prunes;
    else
      ++stats_.double_path_prunes;
  }

  // Orients every edge that has a single feasible direction, repeatedly.
  Result propagate(PartialAopState &state, std::vector<std::size_t> &trail) {
    auto edges = g_.edges();
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t e : order_) {
        if (dirs_[e] != Direction::Unset)
          continue;
        Result fwd = state.test(edges[e].u, edges[e].v);
        Result bwd = state.test(edges[e].v, edges[e].u);
        if (fwd != Result::Ok && bwd != Result::Ok)
          return fwd == Result::DoublePath || bwd == Result::DoublePath
                     ? Result::DoublePath
                     : Result::Cycle;
        if (fwd == Result::Ok && bwd == Result::Ok)
          continue;
        Direction d = fwd == Result::Ok ? Direction::Forward : Direction::Backward;
        auto [u, v] = arc(edges[e], d);
        state.add(u, v);
        dirs_[e] = d;
        trail.push_back(e);
        ++stats_.forced;
        changed = true;
      }
    }
    return Result::Ok;
  }

  bool dfs(int depth, std::size_t pos) {
    while (pos < order_.size() && dirs_[order_[pos]] != Direction::Unset)
      ++pos;
    if (pos == order_.size() || (split_depth_ && depth == *split_depth_)) {
      if (split_depth_) {
        frontier_.push_back(dirs_);
        return false;
      }
      solution_ = dirs_;
      return true;
    }
    std::size_t e = order_[pos];
    auto edges = g_.edges();
    const bool only_forward = first_forward_only_ && depth == 0;
    for (Direction d : {Direction::Forward, Direction::Backward}) {
      if (d == Direction::Backward && only_forward)
        break;
      ++stats_.nodes;
      if (over_budget())
        return false;
      PartialAopState &state = states_[depth + 1];
      state = states_[depth];
      std::vector<std::size_t> trail;
      auto [u, v] = arc(edges[e], d);
      Result r = state.add(u, v);
      if (r == Result::Ok) {
        dirs_[e] = d;
        trail.push_back(e);
        if (propagate_)
          r = propagate(state, trail);
      }
      if (r == Result::Ok) {
        if (dfs(depth + 1, pos + 1))
          return true;
      } else {
        count_prune(r);
      }
      for (std::size_t t : trail)
        dirs_[t] = Direction::Unset;
      if (aborted_)
        return false;
    }
    return false;
  }

  const UndirectedGraph &g_;
  const std::vector<std::size_t> &order_;
  bool propagate_;
  SharedControl &control_;
  std::size_t ticket_;
  std::vector<Direction> dirs_;
  std::vector<PartialAopState> states_;
  bool first_forward_only_ = true;
  std::optional<int> split_depth_;
  bool aborted_ = false;
  std::vector<Direction> solution_;
  std::vector<std::vector<Direction>> frontier_;
  SearchStats stats_;
};

void accumulate(SearchStats &into, const SearchStats &from) {
  into.nodes += from.nodes;
  into.cycle_prunes += from.cycle_prunes;
  into.double_path_prunes += from.double_path_prunes;
  into.forced += from.forced;
}

AopVerdict finish(const UndirectedGraph &g, AopVerdict verdict,
                  const std::vector<Direction> *solution, Clock::time_point start) {
  verdict.stats.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (solution) {
    Orientation o(g, *solution);
    if (!verify_aop(o).ok)
      throw InvariantError("AOP search produced an orientation that fails verification");
    verdict.witness = std::move(o);
  }
  return verdict;
}

} // namespace

AopVerdict decide_aop(const UndirectedGraph &g, const AopBudget &budget) {
  const auto start = Clock::now();
  AopVerdict verdict;
  if (!triangle_free(g)) {
    verdict.status = AopStatus::NoAOP;
    return finish(g, verdict, nullptr, start);
  }
  const auto order = aop_branching_order(g);
  SharedControl control;
  control.max_nodes = budget.max_nodes;
  if (budget.max_seconds)
    control.deadline = start + std::chrono::duration_cast<Clock::duration>(
                                   std::chrono::duration<double>(*budget.max_seconds));

  const int threads = std::max(1, budget.threads);
  if (threads == 1 || g.size() < 8) {
    Search search(g, order, budget.propagate, control, 0);
    bool found = search.run(true);
    verdict.stats = search.stats();
    if (found) {
      verdict.status = AopStatus::HasAOP;
      return finish(g, verdict, &search.solution(), start);
    }
    verdict.status = search.aborted() ? AopStatus::Timeout : AopStatus::NoAOP;
    return finish(g, verdict, nullptr, start);
  }

  // Split the tree at a fixed depth; subproblems are numbered in sequential
  // DFS order so the lowest-numbered witness is the sequential one.
  int split = 1;
  while ((1 << (split - 1)) < 16 * threads && split < static_cast<int>(g.size()))
    ++split;
  Search splitter(g, order, budget.propagate, control, 0);
  splitter.run(true, split);
  accumulate(verdict.stats, splitter.stats());
  const auto &frontier = splitter.frontier();

  std::vector<char> exhausted(frontier.size(), 0);
  std::vector<std::vector<Direction>> solutions(frontier.size());
  std::atomic<std::size_t> next{0};
  std::mutex mutex;
  auto worker = [&] {
    while (true) {
      std::size_t ticket = next.fetch_add(1);
      if (ticket >= frontier.size() || ticket > control.best.load())
        return;
      Search search(g, order, budget.propagate, control, ticket);
      search.load(frontier[ticket]);
      bool found = search.run(false);
      std::lock_guard lock(mutex);
      accumulate(verdict.stats, search.stats());
      if (found) {
        solutions[ticket] = search.solution();
        std::size_t best = control.best.load();
        while (ticket < best && !control.best.compare_exchange_weak(best, ticket)) {
        }
      }
      if (!search.aborted())
        exhausted[ticket] = 1;
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back(worker);
  for (auto &t : pool)
    t.join();

  std::size_t best = control.best.load();
  std::size_t limit = std::min(best, frontier.size());
  bool complete = std::all_of(exhausted.begin(), exhausted.begin() + static_cast<std::ptrdiff_t>(limit),
                              [](char c) { return c != 0; });
  if (!complete) {
    verdict.status = AopStatus::Timeout;
    return finish(g, verdict, nullptr, start);
  }
  if (best < frontier.size()) {
    verdict.status = AopStatus::HasAOP;
    return finish(g, verdict, &solutions[best], start);
  }
  verdict.status = AopStatus::NoAOP;
  return finish(g, verdict, nullptr, start);
}

bool cycle_orientation_lemma_check(int k) {
  if (k < 4)
    throw InputError("cycle lemma needs k >= 4");
  // Edge i joins i and i+1 (mod k); bit i set means i -> i+1.
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    auto forward = [&](int i) { return ((mask >> (((i % k) + k) % k)) & 1u) != 0; };
    int longest = 0;
    for (int s = 0; s < k; ++s)
      for (bool dir : {true, false}) {
        int run = 0;
        while (run < k && forward(s + run) == dir)
          ++run;
        longest = std::max(longest, run);
      }
    if (longest < k - 2)
      continue;
    bool acyclic = mask != 0 && mask != (1u << k) - 1;
    bool two_paths = false;
    for (int x = 0; x < k && !two_paths; ++x)
      for (int y = 0; y < k && !two_paths; ++y) {
        if (x == y)
          continue;
        // Clockwise x, x+1, .., y must use forward edges; counter-clockwise
        // x, x-1, .., y must use backward edges.
        int cw = ((y - x) % k + k) % k;
        bool ok = true;
        for (int i = 0; i < cw && ok; ++i)
          ok = forward(x + i);
        for (int i = 1; i <= k - cw && ok; ++i)
          ok = !forward(x - i);
        two_paths = ok;
      }
    if (acyclic != two_paths)
      return false;
  }
  return true;
}

AopPipelineReport aop_pipeline_check(int n, int g, std::size_t cap, int chromatic_cap) {
  if (g < 0)
    throw InputError("iteration count must be non-negative");
  auto z = zykov(n, cap);
  auto line = iterate_line_digraph(z.orientation.to_digraph(), g, cap);
  auto under = line.underlying();

  AopPipelineReport report;
  report.n = n;
  report.iterations = g;
  report.vertices = line.order();
  report.edges = line.size();
  report.aop = verify_aop(Orientation::of(line)).ok;
  report.odd_girth = odd_girth(under);
  report.odd_girth_bound = 2 * g + 3;
  if (under.order() <= chromatic_cap)
    report.chromatic_number = chromatic_number(under, chromatic_cap).first;
  report.passed = report.aop &&
                  (!report.odd_girth || *report.odd_girth >= report.odd_girth_bound);
  return report;
}

bool shift_graph_contains_g92(int n) { return n >= 9; }

} // namespace shiftgraph
