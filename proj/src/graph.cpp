#include "shiftgraph/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

namespace shiftgraph {

namespace {

std::string pair_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

void check_labels(int n, const std::vector<std::string> &labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw InputError("label count " + std::to_string(labels.size()) +
                     " does not match vertex count " + std::to_string(n));
}

void check_endpoints(int n, Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw InputError("endpoint out of range in " + pair_text(u, v) + " for n=" +
                     std::to_string(n));
  if (u == v)
    throw InputError("self-loop at vertex " + std::to_string(u));
}

} // namespace

UndirectedGraph::UndirectedGraph(int n) : UndirectedGraph(n, {}) {}

UndirectedGraph::UndirectedGraph(int n, std::vector<Edge> edges,
                                 std::vector<std::string> labels)
    : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
  if (n < 0)
    throw InputError("negative vertex count");
  check_labels(n, labels_);
  for (auto &e : edges_) {
    check_endpoints(n, e.u, e.v);
    if (e.u > e.v)
      std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end())
    throw InputError("duplicate edge " + pair_text(dup->u, dup->v));

  adj_.assign(static_cast<std::size_t>(n), {});
  for (const auto &e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto &nb : adj_)
    std::sort(nb.begin(), nb.end());
}

bool UndirectedGraph::adjacent(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    return false;
  const auto &nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<std::size_t> UndirectedGraph::edge_index(Vertex u,
                                                       Vertex v) const {
  if (u > v)
    std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || *it != Edge{u, v})
    return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::string UndirectedGraph::label(Vertex v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

UndirectedGraph UndirectedGraph::induced(std::span<const Vertex> keep) const {
  std::vector<int> where(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= n_ || where[keep[i]] != -1)
      throw InputError("induced: vertex list must be distinct ids in range");
    where[keep[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (const auto &e : edges_)
    if (where[e.u] >= 0 && where[e.v] >= 0)
      edges.push_back({where[e.u], where[e.v]});
  std::vector<std::string> labels;
  if (!labels_.empty())
    for (Vertex v : keep)
      labels.push_back(labels_[v]);
  return UndirectedGraph(static_cast<int>(keep.size()), std::move(edges),
                         std::move(labels));
}

TopoResult topological_order(std::span<const Edge> arcs, int n) {
  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(n));
  std::vector<int> indeg(static_cast<std::size_t>(n), 0);
  for (const auto &a : arcs) {
    out[a.u].push_back(a.v);
    ++indeg[a.v];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 0; v < n; ++v)
    if (indeg[v] == 0)
      ready.push(v);

  TopoResult result;
  while (!ready.empty()) {
    Vertex v = ready.top();
    ready.pop();
    result.order.push_back(v);
    for (Vertex w : out[v])
      if (--indeg[w] == 0)
        ready.push(w);
  }
  if (static_cast<int>(result.order.size()) == n)
    return result;

  // Every leftover vertex has an in-arc from another leftover vertex, so
  // walking backwards along such arcs must revisit a vertex.
  std::vector<std::vector<Vertex>> in(static_cast<std::size_t>(n));
  for (const auto &a : arcs)
    if (indeg[a.u] > 0 && indeg[a.v] > 0)
      in[a.v].push_back(a.u);
  for (auto &list : in)
    std::sort(list.begin(), list.end());
  Vertex start = 0;
  while (indeg[start] == 0)
    ++start;
  std::vector<int> seen_at(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> back;
  Vertex v = start;
  while (seen_at[v] < 0) {
    seen_at[v] = static_cast<int>(back.size());
    back.push_back(v);
    v = in[v].front();
  }
  // back[seen_at[v]..] traced backwards; reverse to get forward arcs.
  std::vector<Vertex> cycle(back.begin() + seen_at[v], back.end());
  std::reverse(cycle.begin(), cycle.end());
  auto smallest = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), smallest, cycle.end());
  cycle.push_back(cycle.front());
  result.order.clear();
  result.cycle = std::move(cycle);
  return result;
}

AcyclicDigraph::AcyclicDigraph(int n, std::vector<Edge> arcs,
                               std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
  build(std::move(arcs));
  auto topo = topological_order(arcs_, n_);
  if (!topo.acyclic()) {
    std::string text;
    for (std::size_t i = 0; i < topo.cycle.size(); ++i)
      text += (i ? "->" : "") + std::to_string(topo.cycle[i]);
    throw CycleError("directed cycle " + text, topo.cycle);
  }
  topo_ = std::move(topo.order);
  pos_.assign(static_cast<std::size_t>(n_), 0);
  for (int i = 0; i < n_; ++i)
    pos_[topo_[i]] = i;
}

AcyclicDigraph::AcyclicDigraph(int n, std::vector<Edge> arcs,
                               std::vector<Vertex> topo,
                               std::vector<std::string> labels)
    : n_(n), topo_(std::move(topo)), labels_(std::move(labels)) {
  build(std::move(arcs));
  if (static_cast<int>(topo_.size()) != n_)
    throw InputError("topological order has wrong length");
  pos_.assign(static_cast<std::size_t>(n_), -1);
  for (int i = 0; i < n_; ++i) {
    Vertex v = topo_[i];
    if (v < 0 || v >= n_ || pos_[v] != -1)
      throw InputError("topological order is not a permutation");
    pos_[v] = i;
  }
  for (const auto &a : arcs_)
    if (pos_[a.u] >= pos_[a.v])
      throw InputError("arc " + pair_text(a.u, a.v) +
                       " violates the supplied topological order");
}

void AcyclicDigraph::build(std::vector<Edge> arcs) {
  if (n_ < 0)
    throw InputError("negative vertex count");
  check_labels(n_, labels_);
  arcs_ = std::move(arcs);
  std::set<Edge> pairs;
  for (const auto &a : arcs_) {
    check_endpoints(n_, a.u, a.v);
    if (!pairs.insert({std::min(a.u, a.v), std::max(a.u, a.v)}).second)
      throw InputError("two arcs on the pair " +
                       pair_text(std::min(a.u, a.v), std::max(a.u, a.v)));
  }
  std::sort(arcs_.begin(), arcs_.end());
  out_.assign(static_cast<std::size_t>(n_), {});
  in_.assign(static_cast<std::size_t>(n_), {});
  for (const auto &a : arcs_) {
    out_[a.u].push_back(a.v);
    in_[a.v].push_back(a.u);
  }
  for (auto &list : in_)
    std::sort(list.begin(), list.end());
}

bool AcyclicDigraph::has_arc(Vertex u, Vertex v) const {
  return arc_index(u, v).has_value();
}

std::optional<std::size_t> AcyclicDigraph::arc_index(Vertex u, Vertex v) const {
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), Edge{u, v});
  if (it == arcs_.end() || *it != Edge{u, v})
    return std::nullopt;
  return static_cast<std::size_t>(it - arcs_.begin());
}

std::string AcyclicDigraph::label(Vertex v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

UndirectedGraph AcyclicDigraph::underlying() const {
  return UndirectedGraph(n_, arcs_, labels_);
}

Orientation::Orientation(UndirectedGraph base)
    : base_(std::move(base)), dirs_(base_.size(), Direction::Unset) {}

Orientation::Orientation(UndirectedGraph base, std::vector<Direction> dirs)
    : base_(std::move(base)), dirs_(std::move(dirs)) {
  if (dirs_.size() != base_.size())
    throw InputError("orientation must assign one direction per edge");
}

Orientation Orientation::natural(UndirectedGraph base) {
  std::vector<Direction> dirs(base.size(), Direction::Forward);
  return Orientation(std::move(base), std::move(dirs));
}

Orientation Orientation::from_arcs(UndirectedGraph base,
                                   std::span<const Edge> arcs) {
  Orientation o(std::move(base));
  for (const auto &a : arcs) {
    auto idx = o.base_.edge_index(a.u, a.v);
    if (!idx)
      throw InputError("oriented edge " + pair_text(a.u, a.v) +
                       " is not an edge of the graph");
    if (o.dirs_[*idx] != Direction::Unset)
      throw InputError("edge " + pair_text(a.u, a.v) + " oriented twice");
    o.dirs_[*idx] = a.u < a.v ? Direction::Forward : Direction::Backward;
  }
  if (!o.total())
    throw InputError("orientation does not cover every edge");
  return o;
}

Orientation Orientation::of(const AcyclicDigraph &d) {
  return from_arcs(d.underlying(), d.arcs());
}

bool Orientation::total() const {
  return std::none_of(dirs_.begin(), dirs_.end(),
                      [](Direction d) { return d == Direction::Unset; });
}

std::vector<Edge> Orientation::arcs() const {
  std::vector<Edge> out;
  auto edges = base_.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (dirs_[i] == Direction::Forward)
      out.push_back(edges[i]);
    else if (dirs_[i] == Direction::Backward)
      out.push_back({edges[i].v, edges[i].u});
  }
  return out;
}

AcyclicDigraph Orientation::to_digraph() const {
  if (!total())
    throw InputError("orientation is partial");
  return AcyclicDigraph(base_.order(), arcs(), base_.labels());
}

PathCountMatrix::PathCountMatrix(const AcyclicDigraph &d)
    : n_(d.order()),
      counts_(static_cast<std::size_t>(n_) * n_, PathCount::Zero) {
  auto topo = d.topo();
  for (Vertex src = 0; src < n_; ++src) {
    PathCount *row = &counts_[static_cast<std::size_t>(src) * n_];
    for (int i = d.position(src) + 1; i < n_; ++i) {
      Vertex v = topo[i];
      int sum = 0;
      for (Vertex w : d.in_neighbors(v)) {
        sum += w == src ? 1 : static_cast<int>(row[w]);
        if (sum >= 2)
          break;
      }
      row[v] = static_cast<PathCount>(std::min(sum, 2));
    }
  }
}

std::optional<Edge> PathCountMatrix::first_many() const {
  for (std::size_t i = 0; i < counts_.size(); ++i)
    if (counts_[i] == PathCount::Many)
      return Edge{static_cast<Vertex>(i / n_), static_cast<Vertex>(i % n_)};
  return std::nullopt;
}

std::vector<std::vector<Vertex>> connected_components(const UndirectedGraph &g) {
  std::vector<std::vector<Vertex>> comps;
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s])
      continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (Vertex w : g.neighbors(comp[head]))
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

} // namespace shiftgraph
