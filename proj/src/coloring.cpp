#include "shiftgraph/coloring.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace shiftgraph {

bool is_proper(const UndirectedGraph &g, std::span<const int> colors) {
  if (static_cast<int>(colors.size()) != g.order())
    return false;
  return std::none_of(g.edges().begin(), g.edges().end(), [&](const Edge &e) {
    return colors[e.u] == colors[e.v];
  });
}

Coloring::Coloring(const UndirectedGraph &g, std::vector<int> colors, int palette)
    : colors_(std::move(colors)), palette_(palette) {
  if (static_cast<int>(colors_.size()) != g.order())
    throw InputError("coloring must assign one color per vertex");
  for (int c : colors_)
    if (c < 0 || c >= palette_)
      throw InputError("color " + std::to_string(c) + " outside palette of " +
                       std::to_string(palette_));
  for (const auto &e : g.edges())
    if (colors_[e.u] == colors_[e.v])
      throw InputError("improper coloring: edge (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ") is monochromatic");
}

Coloring::Coloring(const UndirectedGraph &g, std::vector<int> colors)
    : Coloring(g, colors,
               colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1) {}

int Coloring::colors_used() const {
  return static_cast<int>(std::set<int>(colors_.begin(), colors_.end()).size());
}

std::uint64_t central_binomial(int k) {
  if (k < 0)
    return 0;
  int r = k / 2;
  unsigned __int128 value = 1;
  for (int i = 1; i <= r; ++i)
    value = value * static_cast<unsigned>(k - r + i) / static_cast<unsigned>(i);
  return static_cast<std::uint64_t>(value);
}

int k_star(int c) {
  if (c <= 0)
    return 0;
  int k = 1;
  while (central_binomial(k) < static_cast<std::uint64_t>(c))
    ++k;
  return k;
}

SubsetPalette::SubsetPalette(int k) : k_(k) {
  if (k < 1 || k > 31)
    throw InputError("subset palette needs 1 <= k <= 31");
  int r = k / 2;
  if (r == 0) {
    subsets_.push_back(0);
    return;
  }
  // Gosper's hack walks same-size masks in increasing order, which is the
  // colexicographic order of the subsets.
  std::uint32_t mask = (1u << r) - 1;
  const std::uint32_t limit = 1u << k;
  while (mask < limit) {
    subsets_.push_back(mask);
    std::uint32_t low = mask & -mask;
    std::uint32_t ripple = mask + low;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
  }
}

Coloring log_color_line_digraph(const AcyclicDigraph &g, const Coloring &base) {
  auto under = g.underlying();
  if (!is_proper(under, base.colors()))
    throw InputError("base coloring is not proper for the digraph");
  auto line = line_digraph(g).digraph.underlying();

  std::vector<int> used(base.colors().begin(), base.colors().end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  const int c = static_cast<int>(used.size());
  if (c == 0)
    return Coloring(line, {}, 0);

  const int k = k_star(c);
  SubsetPalette palette(k);
  auto subset_of = [&](Vertex v) {
    auto rank = std::lower_bound(used.begin(), used.end(), base[v]) - used.begin();
    return palette.subsets()[rank];
  };

  std::vector<int> colors;
  colors.reserve(g.size());
  for (const auto &a : g.arcs()) {
    std::uint32_t diff = subset_of(a.u) & ~subset_of(a.v);
    if (diff == 0)
      throw InvariantError("equal subsets on the ends of an arc");
    colors.push_back(std::countr_zero(diff));
  }
  try {
    return Coloring(line, std::move(colors), k);
  } catch (const InputError &e) {
    throw InvariantError(std::string("log coloring is not proper: ") + e.what());
  }
}

Coloring lift_coloring(const AcyclicDigraph &g, const Coloring &line_coloring) {
  auto line = line_digraph(g);
  if (!is_proper(line.digraph.underlying(), line_coloring.colors()))
    throw InputError("line coloring is not proper");

  // Set of colors on each bag; sinks keep the empty set.
  std::vector<std::vector<int>> sets(static_cast<std::size_t>(g.order()));
  auto arcs = g.arcs();
  for (std::size_t x = 0; x < arcs.size(); ++x)
    sets[arcs[x].u].push_back(line_coloring[static_cast<Vertex>(x)]);
  std::set<std::vector<int>> distinct;
  bool sinks = false;
  for (auto &s : sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty())
      sinks = true;
    else
      distinct.insert(s);
  }
  std::map<std::vector<int>, int> id;
  for (const auto &s : distinct)
    id.emplace(s, static_cast<int>(id.size()));
  const int sink_color = static_cast<int>(id.size());

  std::vector<int> colors;
  for (const auto &s : sets)
    colors.push_back(s.empty() ? sink_color : id.at(s));
  try {
    return Coloring(g.underlying(), std::move(colors), sink_color + (sinks ? 1 : 0));
  } catch (const InputError &e) {
    throw InvariantError(std::string("lifted coloring is not proper: ") + e.what());
  }
}

namespace {

// First-fit along `order`, seeing only neighbors inside `side`.
std::vector<int> greedy(const UndirectedGraph &g, std::span<const Vertex> order,
                        const std::vector<bool> &side) {
  std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
  for (Vertex v : order) {
    std::vector<bool> taken;
    for (Vertex w : g.neighbors(v))
      if (side[w] && color[w] >= 0) {
        if (static_cast<int>(taken.size()) <= color[w])
          taken.resize(color[w] + 1, false);
        taken[color[w]] = true;
      }
    int c = 0;
    while (c < static_cast<int>(taken.size()) && taken[c])
      ++c;
    color[v] = c;
  }
  return color;
}

} // namespace

KabResult color_kab_free(const AcyclicDigraph &t_prime, int a, int b) {
  if (a < 1 || b < 1)
    throw InputError("K_{a,b} parameters must be >= 1");
  for (const auto &arc : t_prime.arcs())
    if (arc.u > arc.v)
      throw InputError("arc (" + std::to_string(arc.u) + "," + std::to_string(arc.v) +
                       ") is not an arc of T_n (needs tail < head)");
  const int n = t_prime.order();
  auto under = t_prime.underlying();

  KabReport report;
  report.n = n;
  report.a = a;
  report.b = b;
  std::vector<bool> in_left(static_cast<std::size_t>(n)), in_right(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    // |B_H(v)| is the out-degree of v in t_prime.
    if (t_prime.out_degree(v) <= b - 1) {
      report.left_side.push_back(v);
      in_left[v] = true;
    } else {
      report.right_side.push_back(v);
      in_right[v] = true;
    }
  }

  std::vector<Vertex> left_order(report.left_side.rbegin(), report.left_side.rend());
  auto left_color = greedy(under, left_order, in_left);
  auto right_color = greedy(under, report.right_side, in_right);

  for (Vertex v : report.left_side)
    report.left_colors = std::max(report.left_colors, left_color[v] + 1);
  for (Vertex v : report.right_side)
    report.right_colors = std::max(report.right_colors, right_color[v] + 1);

  std::vector<int> base(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v)
    base[v] = in_left[v] ? left_color[v] : report.left_colors + right_color[v];
  Coloring base_coloring(under, std::move(base),
                         std::max(1, report.left_colors + report.right_colors));

  if (report.right_colors > a) {
    // The first vertex colored >= a saw >= a distinct colors on earlier
    // (smaller index) neighbors in R, i.e. on its in-neighbors. Their arcs
    // into v and b arcs out of v span a K_{a,b}.
    for (Vertex v : report.right_side) {
      if (right_color[v] < a)
        continue;
      KabWitness w;
      w.center = v;
      for (Vertex u : t_prime.in_neighbors(v))
        if (in_right[u] && static_cast<int>(w.left.size()) < a)
          w.left.push_back(static_cast<Vertex>(*t_prime.arc_index(u, v)));
      for (Vertex x : t_prime.out_neighbors(v))
        if (static_cast<int>(w.right.size()) < b)
          w.right.push_back(static_cast<Vertex>(*t_prime.arc_index(v, x)));
      report.witness = std::move(w);
      break;
    }
    if (!report.witness)
      throw InvariantError("R side exceeded its bound without a witness");
  }
  report.within_bounds = report.left_colors <= b && report.right_colors <= a;

  auto line = line_digraph(t_prime);
  auto coloring = log_color_line_digraph(t_prime, base_coloring);
  report.base_colors = base_coloring.colors_used();
  report.k_star = k_star(report.base_colors);
  report.final_palette = coloring.palette();
  return {std::move(line), std::move(base_coloring), std::move(coloring),
          std::move(report)};
}

namespace {

bool independent_subset(const UndirectedGraph &g, std::span<const Vertex> pool,
                        std::size_t start, int need, std::vector<Vertex> &chosen) {
  if (need == 0)
    return true;
  for (std::size_t i = start; i < pool.size(); ++i) {
    Vertex v = pool[i];
    if (std::any_of(chosen.begin(), chosen.end(),
                    [&](Vertex w) { return g.adjacent(v, w); }))
      continue;
    chosen.push_back(v);
    if (independent_subset(g, pool, i + 1, need - 1, chosen))
      return true;
    chosen.pop_back();
  }
  return false;
}

// Enumerates independent a-subsets of `pool` and asks whether their common
// neighborhood holds an independent b-set.
bool find_kab(const UndirectedGraph &g, std::span<const Vertex> pool,
              std::size_t start, int a, int b, std::vector<Vertex> &left) {
  if (static_cast<int>(left.size()) == a) {
    std::vector<Vertex> common(g.neighbors(left[0]).begin(), g.neighbors(left[0]).end());
    for (std::size_t i = 1; i < left.size(); ++i) {
      std::vector<Vertex> next;
      auto nb = g.neighbors(left[i]);
      std::set_intersection(common.begin(), common.end(), nb.begin(), nb.end(),
                            std::back_inserter(next));
      common = std::move(next);
    }
    if (static_cast<int>(common.size()) < b)
      return false;
    std::vector<Vertex> right;
    return independent_subset(g, common, 0, b, right);
  }
  for (std::size_t i = start; i < pool.size(); ++i) {
    Vertex v = pool[i];
    if (std::any_of(left.begin(), left.end(), [&](Vertex w) { return g.adjacent(v, w); }))
      continue;
    left.push_back(v);
    if (find_kab(g, pool, i + 1, a, b, left))
      return true;
    left.pop_back();
  }
  return false;
}

} // namespace

bool is_kab_free(const UndirectedGraph &g, int a, int b) {
  if (a < 1 || b < 1)
    throw InputError("K_{a,b} parameters must be >= 1");
  // Any induced K_{a,b} has a vertex y on the b side with the a side in N(y).
  for (Vertex y = 0; y < g.order(); ++y) {
    auto pool = g.neighbors(y);
    if (static_cast<int>(pool.size()) < a)
      continue;
    std::vector<Vertex> left;
    if (find_kab(g, pool, 0, a, b, left))
      return false;
  }
  return true;
}

bool is_induced_kab(const UndirectedGraph &g, std::span<const Vertex> left,
                    std::span<const Vertex> right) {
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t j = i + 1; j < left.size(); ++j)
      if (left[i] == left[j] || g.adjacent(left[i], left[j]))
        return false;
  for (std::size_t i = 0; i < right.size(); ++i)
    for (std::size_t j = i + 1; j < right.size(); ++j)
      if (right[i] == right[j] || g.adjacent(right[i], right[j]))
        return false;
  for (Vertex x : left)
    for (Vertex y : right)
      if (!g.adjacent(x, y))
        return false;
  return true;
}

Orientation coloring_to_orientation(const UndirectedGraph &g, const Coloring &c) {
  if (!is_proper(g, c.colors()))
    throw InputError("coloring is not proper for this graph");
  std::vector<Direction> dirs;
  dirs.reserve(g.size());
  for (const auto &e : g.edges())
    dirs.push_back(c[e.u] < c[e.v] ? Direction::Forward : Direction::Backward);
  return Orientation(g, std::move(dirs));
}

namespace {

std::vector<int> longest_ending_at(const AcyclicDigraph &d) {
  std::vector<int> len(static_cast<std::size_t>(d.order()), 0);
  for (Vertex v : d.topo())
    for (Vertex w : d.in_neighbors(v))
      len[v] = std::max(len[v], len[w] + 1);
  return len;
}

} // namespace

Coloring orientation_to_coloring(const Orientation &o) {
  auto d = o.to_digraph();
  auto len = longest_ending_at(d);
  int palette = len.empty() ? 0 : *std::max_element(len.begin(), len.end()) + 1;
  return Coloring(o.base(), std::move(len), palette);
}

int longest_path_length(const AcyclicDigraph &d) {
  auto len = longest_ending_at(d);
  return len.empty() ? 0 : *std::max_element(len.begin(), len.end());
}

} // namespace shiftgraph
