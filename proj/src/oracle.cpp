#include "shiftgraph/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace shiftgraph::oracle {

namespace {

struct PathWalker {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> on_path;
  std::vector<int> ends;
  bool bad = false;

  void walk(Vertex s, Vertex x) {
    for (Vertex y : out[x]) {
      if (y == s || on_path[y]) {
        bad = true; // closes a directed cycle
        continue;
      }
      if (++ends[y] > 1)
        bad = true;
      on_path[y] = 1;
      walk(s, y);
      on_path[y] = 0;
    }
  }
};

} // namespace

bool aop_by_path_enumeration(const Orientation &o) {
  const int n = o.base().order();
  PathWalker w;
  w.out.assign(static_cast<std::size_t>(n), {});
  for (const auto &a : o.arcs())
    w.out[a.u].push_back(a.v);
  w.on_path.assign(static_cast<std::size_t>(n), 0);
  for (Vertex s = 0; s < n && !w.bad; ++s) {
    w.ends.assign(static_cast<std::size_t>(n), 0);
    w.on_path[s] = 1;
    w.walk(s, s);
    w.on_path[s] = 0;
  }
  return !w.bad;
}

bool has_aop_by_enumeration(const UndirectedGraph &g) {
  const std::size_t m = g.size();
  if (m > 30)
    throw InputError("enumeration oracle is limited to 30 edges");
  std::vector<Direction> dirs(m);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    for (std::size_t e = 0; e < m; ++e)
      dirs[e] = (mask >> e) & 1u ? Direction::Backward : Direction::Forward;
    Orientation o(g, dirs);
    auto arcs = o.arcs();
    auto topo = topological_order(arcs, g.order());
    if (!topo.acyclic())
      continue;
    if (PathCountMatrix(o.to_digraph()).first_many() == std::nullopt)
      return true;
  }
  return false;
}

int chromatic_by_enumeration(const UndirectedGraph &g) {
  const int n = g.order();
  if (n == 0)
    return 0;
  for (int k = 1;; ++k) {
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    while (true) {
      bool proper = std::all_of(g.edges().begin(), g.edges().end(),
                                [&](const Edge &e) { return c[e.u] != c[e.v]; });
      if (proper)
        return k;
      int i = 0;
      while (i < n && ++c[i] == k)
        c[i++] = 0;
      if (i == n)
        break;
    }
  }
}

int degeneracy_by_subsets(const UndirectedGraph &g) {
  const int n = g.order();
  if (n > 24)
    throw InputError("subset oracle is limited to 24 vertices");
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int low = n;
    for (Vertex v = 0; v < n; ++v) {
      if (!((mask >> v) & 1u))
        continue;
      int d = 0;
      for (Vertex w : g.neighbors(v))
        d += (mask >> w) & 1u;
      low = std::min(low, d);
    }
    best = std::max(best, low);
  }
  return best;
}

AcyclicDigraph random_acyclic_digraph(std::mt19937_64 &rng, int n, double p) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng))
        arcs.push_back({perm[i], perm[j]});
  return AcyclicDigraph(n, std::move(arcs));
}

AcyclicDigraph random_subdigraph(std::mt19937_64 &rng, const AcyclicDigraph &g, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> arcs;
  for (const auto &a : g.arcs())
    if (coin(rng))
      arcs.push_back(a);
  return AcyclicDigraph(g.order(), std::move(arcs));
}

UndirectedGraph random_graph(std::mt19937_64 &rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng))
        edges.push_back({i, j});
  return UndirectedGraph(n, std::move(edges));
}

} // namespace shiftgraph::oracle
