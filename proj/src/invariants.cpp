#include "shiftgraph/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "shiftgraph/coloring.hpp"

namespace shiftgraph {

Length girth(const UndirectedGraph &g) {
  const int n = g.order();
  int best = INT32_MAX;
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex x = queue[head];
      if (2 * dist[x] >= best)
        break;
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (parent[x] != y) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  if (best == INT32_MAX)
    return std::nullopt;
  return best;
}

namespace {

// BFS in the bipartite double cover from (s, even). Returns the length of
// the shortest odd closed walk through s, or -1, and fills the parent array
// (indexed 2 * v + parity) when requested.
int odd_closed_walk(const UndirectedGraph &g, Vertex s, int stop_at,
                    std::vector<int> &dist, std::vector<int> *parent) {
  std::fill(dist.begin(), dist.end(), -1);
  std::vector<int> queue{2 * s};
  dist[2 * s] = 0;
  if (parent)
    (*parent)[2 * s] = -1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int state = queue[head];
    if (dist[state] + 1 >= stop_at)
      break;
    Vertex x = state / 2;
    int parity = state % 2;
    for (Vertex y : g.neighbors(x)) {
      int next = 2 * y + (1 - parity);
      if (dist[next] >= 0)
        continue;
      dist[next] = dist[state] + 1;
      if (parent)
        (*parent)[next] = state;
      if (next == 2 * s + 1)
        return dist[next];
      queue.push_back(next);
    }
  }
  return -1;
}

} // namespace

Length odd_girth(const UndirectedGraph &g) {
  std::vector<int> dist(2 * static_cast<std::size_t>(g.order()));
  int best = INT32_MAX;
  for (Vertex s = 0; s < g.order(); ++s) {
    int len = odd_closed_walk(g, s, best, dist, nullptr);
    if (len > 0)
      best = std::min(best, len);
  }
  if (best == INT32_MAX)
    return std::nullopt;
  return best;
}

std::vector<Vertex> shortest_odd_cycle(const UndirectedGraph &g) {
  auto len = odd_girth(g);
  if (!len)
    return {};
  std::vector<int> dist(2 * static_cast<std::size_t>(g.order()));
  std::vector<int> parent(dist.size());
  for (Vertex s = 0; s < g.order(); ++s) {
    if (odd_closed_walk(g, s, *len + 1, dist, &parent) != *len)
      continue;
    std::vector<Vertex> walk;
    for (int state = 2 * s + 1; state != -1; state = parent[state])
      walk.push_back(state / 2);
    std::reverse(walk.begin(), walk.end());
    auto cycle = extract_odd_cycle(g, walk);
    return cycle;
  }
  throw InvariantError("odd girth found but no odd walk reconstructed");
}

std::vector<Vertex> extract_odd_cycle(const UndirectedGraph &g,
                                      std::vector<Vertex> walk) {
  if (walk.size() < 2 || walk.front() != walk.back())
    throw InputError("walk is not closed");
  for (std::size_t i = 0; i + 1 < walk.size(); ++i)
    if (!g.adjacent(walk[i], walk[i + 1]))
      throw InputError("consecutive walk vertices " + std::to_string(walk[i]) +
                       " and " + std::to_string(walk[i + 1]) + " are not adjacent");
  if ((walk.size() - 1) % 2 == 0)
    throw InputError("walk has even length " + std::to_string(walk.size() - 1));

  walk.pop_back();
  while (true) {
    // First vertex that repeats an earlier one.
    std::size_t i = 0, j = 0;
    std::vector<int> first(static_cast<std::size_t>(g.order()), -1);
    for (j = 0; j < walk.size(); ++j) {
      if (first[walk[j]] >= 0) {
        i = static_cast<std::size_t>(first[walk[j]]);
        break;
      }
      first[walk[j]] = static_cast<int>(j);
    }
    if (j == walk.size())
      return walk;
    // Split at the repetition into w[i..j) and w[j..) + w[0..i).
    std::vector<Vertex> inner(walk.begin() + i, walk.begin() + j);
    if (inner.size() % 2 == 1) {
      walk = std::move(inner);
    } else {
      std::vector<Vertex> outer(walk.begin() + j, walk.end());
      outer.insert(outer.end(), walk.begin(), walk.begin() + i);
      walk = std::move(outer);
    }
  }
}

bool triangle_free(const UndirectedGraph &g) {
  for (const auto &e : g.edges()) {
    auto a = g.neighbors(e.u);
    auto b = g.neighbors(e.v);
    std::size_t p = 0, q = 0;
    while (p < a.size() && q < b.size()) {
      if (a[p] == b[q])
        return false;
      a[p] < b[q] ? ++p : ++q;
    }
  }
  return true;
}

namespace {

class CliqueSearch {
public:
  explicit CliqueSearch(const UndirectedGraph &g) : g_(g) {}

  int run() {
    std::vector<Vertex> all(static_cast<std::size_t>(g_.order()));
    std::iota(all.begin(), all.end(), 0);
    // Higher degree first helps the coloring bound.
    std::stable_sort(all.begin(), all.end(), [&](Vertex a, Vertex b) {
      return g_.degree(a) > g_.degree(b);
    });
    expand(0, all);
    return best_;
  }

private:
  void expand(int size, std::vector<Vertex> candidates) {
    // Greedy color classes give an upper bound on the clique in `candidates`.
    std::vector<Vertex> order;
    std::vector<int> bound;
    std::vector<std::vector<Vertex>> classes;
    for (Vertex v : candidates) {
      std::size_t c = 0;
      while (c < classes.size() &&
             std::any_of(classes[c].begin(), classes[c].end(),
                         [&](Vertex w) { return g_.adjacent(v, w); }))
        ++c;
      if (c == classes.size())
        classes.emplace_back();
      classes[c].push_back(v);
    }
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (Vertex v : classes[c]) {
        order.push_back(v);
        bound.push_back(static_cast<int>(c) + 1);
      }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (size + bound[i] <= best_)
        return;
      Vertex v = order[i];
      std::vector<Vertex> next;
      for (int j = 0; j < i; ++j)
        if (g_.adjacent(v, order[j]))
          next.push_back(order[j]);
      if (next.empty())
        best_ = std::max(best_, size + 1);
      else
        expand(size + 1, std::move(next));
    }
  }

  const UndirectedGraph &g_;
  int best_ = 0;
};

} // namespace

int clique_number(const UndirectedGraph &g) { return CliqueSearch(g).run(); }

DegeneracyCertificate degeneracy(const UndirectedGraph &g) {
  const int n = g.order();
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::set<std::pair<int, Vertex>> pending;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    pending.insert({deg[v], v});
  }
  std::vector<bool> removed(static_cast<std::size_t>(n), false);
  std::vector<Vertex> removal;
  while (!pending.empty()) {
    auto [d, v] = *pending.begin();
    pending.erase(pending.begin());
    removed[v] = true;
    removal.push_back(v);
    for (Vertex w : g.neighbors(v))
      if (!removed[w]) {
        pending.erase({deg[w], w});
        pending.insert({--deg[w], w});
      }
  }
  std::reverse(removal.begin(), removal.end());
  return back_degree_certificate(g, removal);
}

DegeneracyCertificate back_degree_certificate(const UndirectedGraph &g,
                                              std::span<const Vertex> order) {
  const int n = g.order();
  if (static_cast<int>(order.size()) != n)
    throw InputError("order must list every vertex once");
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    if (order[i] < 0 || order[i] >= n || pos[order[i]] >= 0)
      throw InputError("order is not a permutation of the vertices");
    pos[order[i]] = i;
  }
  DegeneracyCertificate cert;
  cert.order.assign(order.begin(), order.end());
  cert.back_degrees.assign(static_cast<std::size_t>(n), 0);
  for (const auto &e : g.edges())
    ++cert.back_degrees[pos[e.u] > pos[e.v] ? e.u : e.v];
  for (int d : cert.back_degrees)
    cert.degeneracy = std::max(cert.degeneracy, d);
  return cert;
}

namespace {

class ColoringSearch {
public:
  ColoringSearch(const UndirectedGraph &g, int k)
      : g_(g), k_(k), color_(static_cast<std::size_t>(g.order()), -1),
        seen_(static_cast<std::size_t>(g.order()) * k, 0),
        saturation_(static_cast<std::size_t>(g.order()), 0),
        free_degree_(static_cast<std::size_t>(g.order())) {
    for (Vertex v = 0; v < g.order(); ++v)
      free_degree_[v] = g.degree(v);
  }

  bool run() { return assign(0, 0); }
  std::vector<int> colors() const { return color_; }

private:
  Vertex pick() const {
    Vertex best = -1;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (color_[v] >= 0)
        continue;
      if (best < 0 || saturation_[v] > saturation_[best] ||
          (saturation_[v] == saturation_[best] &&
           free_degree_[v] > free_degree_[best]))
        best = v;
    }
    return best;
  }

  void set(Vertex v, int c, int delta) {
    for (Vertex w : g_.neighbors(v)) {
      free_degree_[w] -= delta;
      int &count = seen_[static_cast<std::size_t>(w) * k_ + c];
      if (delta > 0 && count++ == 0)
        ++saturation_[w];
      if (delta < 0 && --count == 0)
        --saturation_[w];
    }
  }

  bool assign(int done, int used) {
    if (done == g_.order())
      return true;
    Vertex v = pick();
    if (saturation_[v] >= k_)
      return false;
    int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (seen_[static_cast<std::size_t>(v) * k_ + c])
        continue;
      color_[v] = c;
      set(v, c, +1);
      if (assign(done + 1, std::max(used, c + 1)))
        return true;
      set(v, c, -1);
      color_[v] = -1;
    }
    return false;
  }

  const UndirectedGraph &g_;
  int k_;
  std::vector<int> color_;
  std::vector<int> seen_;
  std::vector<int> saturation_;
  std::vector<int> free_degree_;
};

} // namespace

std::optional<std::vector<int>> k_coloring(const UndirectedGraph &g, int k) {
  if (g.order() == 0)
    return std::vector<int>{};
  if (k <= 0)
    return std::nullopt;
  ColoringSearch search(g, k);
  if (!search.run())
    return std::nullopt;
  return search.colors();
}

std::pair<int, Coloring> chromatic_number(const UndirectedGraph &g, int cap) {
  if (g.order() > cap)
    throw SizeCapError("exact chromatic number is capped at " +
                       std::to_string(cap) + " vertices (graph has " +
                       std::to_string(g.order()) + ")");
  if (g.order() == 0)
    return {0, Coloring(g, {}, 0)};
  for (int t = std::max(1, clique_number(g));; ++t)
    if (auto colors = k_coloring(g, t))
      return {t, Coloring(g, std::move(*colors), t)};
}

} // namespace shiftgraph
