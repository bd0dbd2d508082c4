#include "shiftgraph/constructors.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "shiftgraph/aop.hpp"
#include "shiftgraph/invariants.hpp"

namespace shiftgraph {

namespace {

std::uint64_t binomial_capped(int n, int k, std::uint64_t cap) {
  if (k < 0 || k > n)
    return 0;
  k = std::min(k, n - k);
  // C(n, i) = C(n, i-1) * (n-i+1) / i stays exact at every step.
  unsigned __int128 value = 1;
  for (int i = 1; i <= k; ++i) {
    value = value * static_cast<unsigned>(n - i + 1) / static_cast<unsigned>(i);
    if (value > cap)
      return cap + 1;
  }
  return static_cast<std::uint64_t>(value);
}

std::string tuple_label(const std::vector<int> &t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i)
    out += (i ? "," : "") + std::to_string(t[i] + 1);
  return out + ")";
}

// Label that iterated line digraphs of T_n give the vertex for tuple t.
std::string arc_sequence_label(const std::vector<int> &t, std::size_t lo,
                               std::size_t hi) {
  if (hi - lo == 2)
    return "(" + std::to_string(t[lo]) + "," + std::to_string(t[lo + 1]) + ")";
  return "(" + arc_sequence_label(t, lo, hi - 1) + "," +
         arc_sequence_label(t, lo + 1, hi) + ")";
}

} // namespace

AcyclicDigraph acyclic_tournament(int n) {
  if (n < 1)
    throw InputError("acyclic tournament needs n >= 1");
  std::vector<Edge> arcs;
  arcs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      arcs.push_back({i, j});
  std::vector<Vertex> topo(static_cast<std::size_t>(n));
  for (Vertex i = 0; i < n; ++i)
    topo[i] = i;
  return AcyclicDigraph(n, std::move(arcs), std::move(topo), {});
}

LineDigraph line_digraph(const AcyclicDigraph &g) {
  auto arcs = g.arcs();
  const int m = static_cast<int>(arcs.size());

  std::vector<Edge> line_arcs;
  for (Vertex x = 0; x < m; ++x) {
    Vertex head = arcs[x].v;
    for (Vertex next : g.out_neighbors(head))
      line_arcs.push_back({x, static_cast<Vertex>(*g.arc_index(head, next))});
  }

  std::vector<int> index(static_cast<std::size_t>(m));
  std::vector<std::vector<Vertex>> bags(static_cast<std::size_t>(g.order()));
  for (Vertex x = 0; x < m; ++x) {
    index[x] = g.position(arcs[x].u);
    bags[index[x]].push_back(x);
  }
  std::vector<Vertex> topo;
  topo.reserve(static_cast<std::size_t>(m));
  for (const auto &bag : bags)
    topo.insert(topo.end(), bag.begin(), bag.end());

  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(m));
  for (const auto &a : arcs)
    labels.push_back("(" + g.label(a.u) + "," + g.label(a.v) + ")");

  return LineDigraph{
      AcyclicDigraph(m, std::move(line_arcs), std::move(topo), std::move(labels)),
      BagDecomposition(std::move(bags), std::move(index))};
}

AcyclicDigraph iterate_line_digraph(const AcyclicDigraph &g, int times,
                                    std::size_t cap) {
  if (times < 0)
    throw InputError("iteration count must be non-negative");
  AcyclicDigraph current = g;
  for (int i = 0; i < times; ++i) {
    if (current.size() > cap)
      throw SizeCapError("line digraph iterate " + std::to_string(i + 1) +
                         " would have " + std::to_string(current.size()) +
                         " vertices (cap " + std::to_string(cap) + ")");
    current = line_digraph(current).digraph;
  }
  return current;
}

Vertex shift_pair_id(int n, Vertex i, Vertex j) {
  return i * (n - 1) - i * (i - 1) / 2 + (j - i - 1);
}

UndirectedGraph shift_graph(int n, int k, std::size_t cap) {
  if (k < 2)
    throw InputError("shift graph needs k >= 2");
  if (k == 2 ? n < 3 : n <= 2 * k)
    throw InputError("shift graph G_{n,k} needs n >= 3 for k = 2 and n > 2k "
                     "otherwise (got n=" + std::to_string(n) +
                     ", k=" + std::to_string(k) + ")");
  auto count = binomial_capped(n, k, cap);
  if (count > cap)
    throw SizeCapError("G_{" + std::to_string(n) + "," + std::to_string(k) +
                       "} exceeds the size cap of " + std::to_string(cap));

  std::vector<std::vector<int>> tuples;
  std::vector<int> t(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    t[i] = i;
  while (true) {
    tuples.push_back(t);
    int i = k - 1;
    while (i >= 0 && t[i] == n - k + i)
      --i;
    if (i < 0)
      break;
    ++t[i];
    for (int j = i + 1; j < k; ++j)
      t[j] = t[j - 1] + 1;
  }
  std::map<std::vector<int>, Vertex> id;
  for (std::size_t v = 0; v < tuples.size(); ++v)
    id.emplace(tuples[v], static_cast<Vertex>(v));

  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < tuples.size(); ++v) {
    const auto &a = tuples[v];
    labels.push_back(tuple_label(a));
    std::vector<int> b(a.begin() + 1, a.end());
    b.push_back(0);
    for (int x = a.back() + 1; x < n; ++x) {
      b.back() = x;
      edges.push_back({static_cast<Vertex>(v), id.at(b)});
    }
  }
  UndirectedGraph result(static_cast<int>(tuples.size()), std::move(edges),
                         std::move(labels));

  auto line = iterate_line_digraph(acyclic_tournament(n), k - 1, cap);
  auto expected = line.underlying();
  bool same = expected.order() == result.order() &&
              std::equal(expected.edges().begin(), expected.edges().end(),
                         result.edges().begin(), result.edges().end());
  for (std::size_t v = 0; same && v < tuples.size(); ++v)
    same = expected.label(static_cast<Vertex>(v)) ==
           arc_sequence_label(tuples[v], 0, tuples[v].size());
  if (!same)
    throw InvariantError("shift graph differs from the iterated line digraph "
                         "of the acyclic tournament");
  return result;
}

InducedLineSubdigraph induced_line_subdigraph(const AcyclicDigraph &t_prime,
                                              int n) {
  if (t_prime.order() > n)
    throw InputError("subdigraph has more vertices than T_n");
  for (const auto &a : t_prime.arcs())
    if (a.u > a.v)
      throw InputError("arc (" + std::to_string(a.u) + "," + std::to_string(a.v) +
                       ") is not an arc of T_n (needs tail < head)");
  auto line = line_digraph(t_prime).digraph;
  std::vector<Vertex> embedding;
  for (const auto &a : t_prime.arcs())
    embedding.push_back(shift_pair_id(n, a.u, a.v));

  auto h = line.underlying();
  auto arcs = t_prime.arcs();
  for (Vertex x = 0; x < h.order(); ++x)
    for (Vertex y = x + 1; y < h.order(); ++y) {
      bool in_shift = arcs[x].v == arcs[y].u || arcs[y].v == arcs[x].u;
      if (in_shift != h.adjacent(x, y))
        throw InvariantError("line subdigraph is not induced in G_{n,2}");
    }
  return {std::move(line), std::move(embedding)};
}

ZykovGraph zykov(int n, std::size_t cap) {
  if (n < 1)
    throw InputError("Zykov graph needs n >= 1");
  {
    std::vector<std::uint64_t> sizes{1};
    for (int m = 1; m < n; ++m) {
      std::uint64_t sum = 0;
      long double prod = 1;
      for (auto s : sizes) {
        sum += s;
        prod *= static_cast<long double>(s);
      }
      if (prod + sum > static_cast<long double>(cap))
        throw SizeCapError("Z_" + std::to_string(m + 1) +
                           " exceeds the size cap of " + std::to_string(cap));
      sizes.push_back(sum + static_cast<std::uint64_t>(prod));
    }
  }

  struct Part {
    int n;
    std::vector<Edge> arcs;
    std::vector<std::string> labels;
  };
  std::vector<Part> parts{{1, {}, {"r"}}};
  for (int m = 1; m < n; ++m) {
    Part next{0, {}, {}};
    std::vector<Vertex> offset;
    for (int j = 0; j < m; ++j) {
      const auto &p = parts[j];
      Vertex base = next.n;
      offset.push_back(base);
      for (const auto &a : p.arcs)
        next.arcs.push_back({a.u + base, a.v + base});
      for (const auto &l : p.labels)
        next.labels.push_back("c" + std::to_string(j + 1) + "." + l);
      next.n += p.n;
    }
    // One apex per transversal, last copy varying fastest.
    std::vector<int> pick(static_cast<std::size_t>(m), 0);
    for (int apex = 0;; ++apex) {
      Vertex a = next.n++;
      next.labels.push_back("a" + std::to_string(apex));
      for (int j = 0; j < m; ++j)
        next.arcs.push_back({offset[j] + pick[j], a});
      int j = m - 1;
      while (j >= 0 && pick[j] == parts[j].n - 1)
        pick[j--] = 0;
      if (j < 0)
        break;
      ++pick[j];
    }
    parts.push_back(std::move(next));
  }

  auto &z = parts.back();
  UndirectedGraph graph(z.n, z.arcs, z.labels);
  auto orientation = Orientation::from_arcs(graph, z.arcs);
  if (graph.order() <= 4096 && !verify_aop(orientation).ok)
    throw InvariantError("Zykov orientation is not AOP");
  return {std::move(graph), std::move(orientation)};
}

UndirectedGraph odd_girth_gadget(int g) {
  if (g < 5 || g % 2 == 0)
    throw InputError("odd-girth gadget needs an odd g >= 5 (got " +
                     std::to_string(g) + ")");
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (Vertex i = 0; i < g; ++i) {
    edges.push_back({i, (i + 1) % g});
    edges.push_back({g + i, (i + g - 1) % g});
    edges.push_back({g + i, (i + 1) % g});
  }
  for (int i = 1; i <= g; ++i)
    labels.push_back("u" + std::to_string(i));
  for (int i = 1; i <= g; ++i)
    labels.push_back("u'" + std::to_string(i));
  return UndirectedGraph(2 * g, std::move(edges), std::move(labels));
}

UndirectedGraph brinkmann_graph() {
  static const std::vector<std::vector<Vertex>> adjacency = {
      {2, 5, 7, 13}, {3, 6, 7, 8}, {4, 8, 9}, {5, 9, 10}, {6, 10, 11},
      {11, 12},      {12, 13},     {15, 20},  {14, 16},   {15, 17},
      {16, 18},      {17, 19},     {18, 20},  {14, 19},   {17, 18},
      {18, 19},      {19, 20},     {20}};
  std::vector<Edge> edges;
  for (Vertex u = 0; u < static_cast<Vertex>(adjacency.size()); ++u)
    for (Vertex v : adjacency[u])
      edges.push_back({u, v});
  return UndirectedGraph(21, std::move(edges));
}

std::vector<ThreePath> three_edge_paths(const UndirectedGraph &g) {
  std::vector<ThreePath> paths;
  for (Vertex b = 0; b < g.order(); ++b)
    for (Vertex c : g.neighbors(b))
      for (Vertex a : g.neighbors(b)) {
        if (a == c)
          continue;
        for (Vertex d : g.neighbors(c))
          if (d != b && d != a && a < d)
            paths.push_back({a, b, c, d});
      }
  std::sort(paths.begin(), paths.end());
  return paths;
}

bool in_five_cycle(const UndirectedGraph &g, const ThreePath &p) {
  auto na = g.neighbors(p.a);
  auto nd = g.neighbors(p.d);
  std::vector<Vertex> common;
  std::set_intersection(na.begin(), na.end(), nd.begin(), nd.end(),
                        std::back_inserter(common));
  return std::any_of(common.begin(), common.end(),
                     [&](Vertex x) { return x != p.b && x != p.c; });
}

UndirectedGraph girth5_non_aop(const UndirectedGraph &g0) {
  auto g0_girth = girth(g0);
  if (g0_girth != 5)
    throw InputError("girth5 construction needs a base graph of girth 5 (got " +
                     (g0_girth ? std::to_string(*g0_girth) : "inf") + ")");
  if (k_coloring(g0, 3))
    throw InputError("girth5 construction needs chromatic number >= 4");

  std::vector<Edge> edges(g0.edges().begin(), g0.edges().end());
  std::vector<std::string> labels;
  for (Vertex v = 0; v < g0.order(); ++v)
    labels.push_back(g0.label(v));
  UndirectedGraph current = g0;
  int apexes = 0;
  for (const auto &p : three_edge_paths(g0)) {
    if (in_five_cycle(current, p))
      continue;
    Vertex q = g0.order() + apexes;
    labels.push_back("q" + std::to_string(apexes++));
    edges.push_back({p.a, q});
    edges.push_back({p.d, q});
    current = UndirectedGraph(q + 1, edges, labels);
  }
  if (girth(current) != 5)
    throw InvariantError("girth5 construction produced girth != 5");
  return current;
}

namespace structure {

bool bags_independent(const AcyclicDigraph &, const LineDigraph &l) {
  const auto &d = l.digraph;
  for (int i = 0; i < l.bags.bag_count(); ++i)
    for (Vertex x : l.bags.bag(i))
      for (Vertex y : l.bags.bag(i))
        if (d.has_arc(x, y))
          return false;
  return true;
}

bool adjacency_respects_index(const AcyclicDigraph &g, const LineDigraph &l) {
  auto topo = g.topo();
  for (const auto &a : l.digraph.arcs()) {
    int ix = l.bags.index(a.u);
    int iy = l.bags.index(a.v);
    if (!(ix < iy))
      return false;
    if (!g.has_arc(topo[ix], topo[iy]) && !g.has_arc(topo[iy], topo[ix]))
      return false;
  }
  return true;
}

bool unique_larger_bag(const AcyclicDigraph &, const LineDigraph &l) {
  auto h = l.digraph.underlying();
  for (Vertex u = 0; u < h.order(); ++u) {
    int seen = -1;
    for (Vertex w : h.neighbors(u)) {
      int iw = l.bags.index(w);
      if (iw < l.bags.index(u))
        continue;
      if (seen >= 0 && seen != iw)
        return false;
      seen = iw;
    }
  }
  return true;
}

bool unique_parent(const AcyclicDigraph &g, const LineDigraph &l) {
  auto topo = g.topo();
  auto h = l.digraph.underlying();
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j) {
      if (!g.has_arc(topo[i], topo[j]) || l.bags.bag(j).empty())
        continue;
      int full = 0;
      for (Vertex x : l.bags.bag(i)) {
        int hits = 0;
        for (Vertex y : l.bags.bag(j))
          hits += h.adjacent(x, y);
        if (hits == static_cast<int>(l.bags.bag(j).size()))
          ++full;
        else if (hits != 0)
          return false;
      }
      if (full != 1)
        return false;
    }
  return true;
}

bool smaller_neighbors_independent(const AcyclicDigraph &, const LineDigraph &l) {
  auto h = l.digraph.underlying();
  for (Vertex u = 0; u < h.order(); ++u) {
    int iu = l.bags.index(u);
    std::vector<Vertex> lower;
    for (Vertex w : h.neighbors(u))
      if (l.bags.index(w) < iu)
        lower.push_back(w);
    for (Vertex w : lower)
      for (Vertex x : l.bags.bag(iu))
        if (!h.adjacent(w, x))
          return false;
    for (std::size_t p = 0; p < lower.size(); ++p)
      for (std::size_t q = p + 1; q < lower.size(); ++q)
        if (h.adjacent(lower[p], lower[q]))
          return false;
  }
  return true;
}

} // namespace structure

} // namespace shiftgraph
