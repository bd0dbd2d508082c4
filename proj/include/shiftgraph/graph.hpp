#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace shiftgraph {

using Vertex = std::int32_t;

/// An edge {u, v} with u < v, or an arc u -> v, depending on context.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge &, const Edge &) = default;
};

// Error hierarchy. The CLI maps each family onto an exit code.

/// Malformed input or violated precondition.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A directed cycle where an acyclic arc set was required.
class CycleError : public InputError {
public:
  CycleError(const std::string &what, std::vector<Vertex> witness)
      : InputError(what), witness_(std::move(witness)) {}

  /// Closed directed walk v0 -> v1 -> ... -> v0 (first vertex repeated last).
  const std::vector<Vertex> &witness() const { return witness_; }

private:
  std::vector<Vertex> witness_;
};

/// A construction would exceed its configured size cap.
class SizeCapError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An internal postcondition failed. Always a bug.
class InvariantError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

inline constexpr std::size_t kDefaultSizeCap = 1'000'000;

/// Simple undirected graph on vertices 0..n-1 with a canonical edge list.
class UndirectedGraph {
public:
  UndirectedGraph() = default;

  /// Edgeless graph on n vertices.
  explicit UndirectedGraph(int n);

  /// Validates (range, loops, duplicates) and canonicalizes the edge list.
  /// Endpoints of each pair may come in any order. Throws InputError.
  UndirectedGraph(int n, std::vector<Edge> edges,
                  std::vector<std::string> labels = {});

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }

  /// Edges with u < v, sorted lexicographically.
  std::span<const Edge> edges() const { return edges_; }
  /// Sorted ascending.
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

  bool adjacent(Vertex u, Vertex v) const;
  /// Position of {u, v} in edges(), if present.
  std::optional<std::size_t> edge_index(Vertex u, Vertex v) const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string> &labels() const { return labels_; }
  /// Display label, or the decimal id when the graph is unlabeled.
  std::string label(Vertex v) const;

  /// Subgraph induced by `keep` (any order); vertex i of the result is keep[i].
  UndirectedGraph induced(std::span<const Vertex> keep) const;

  friend bool operator==(const UndirectedGraph &a, const UndirectedGraph &b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.labels_ == b.labels_;
  }

private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::string> labels_;
};

/// Result of a Kahn-style topological sort.
struct TopoResult {
  std::vector<Vertex> order; ///< empty unless acyclic (or n == 0)
  std::vector<Vertex> cycle; ///< closed witness v0 .. v0 when cyclic

  bool acyclic() const { return cycle.empty(); }
};

/// Kahn's algorithm; among available sources the smallest id goes first.
/// Arcs must be in range; duplicates are tolerated.
TopoResult topological_order(std::span<const Edge> arcs, int n);

/// Oriented simple graph with no directed cycle, plus its topological order.
class AcyclicDigraph {
public:
  AcyclicDigraph() = default;

  /// Throws InputError on range/loop/duplicate/antiparallel arcs and
  /// CycleError (with witness) when the arcs contain a directed cycle.
  AcyclicDigraph(int n, std::vector<Edge> arcs,
                 std::vector<std::string> labels = {});

  /// Same as above but with a caller-supplied topological order, which is
  /// validated instead of recomputed.
  AcyclicDigraph(int n, std::vector<Edge> arcs, std::vector<Vertex> topo,
                 std::vector<std::string> labels);

  int order() const { return n_; }
  std::size_t size() const { return arcs_.size(); }

  /// Arcs (tail, head), sorted lexicographically.
  std::span<const Edge> arcs() const { return arcs_; }
  std::span<const Vertex> topo() const { return topo_; }
  int position(Vertex v) const { return pos_[v]; }

  std::span<const Vertex> out_neighbors(Vertex v) const { return out_[v]; }
  std::span<const Vertex> in_neighbors(Vertex v) const { return in_[v]; }
  int out_degree(Vertex v) const { return static_cast<int>(out_[v].size()); }

  bool has_arc(Vertex u, Vertex v) const;
  std::optional<std::size_t> arc_index(Vertex u, Vertex v) const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string> &labels() const { return labels_; }
  std::string label(Vertex v) const;

  UndirectedGraph underlying() const;

  friend bool operator==(const AcyclicDigraph &a, const AcyclicDigraph &b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_ && a.labels_ == b.labels_;
  }

private:
  void build(std::vector<Edge> arcs);

  int n_ = 0;
  std::vector<Edge> arcs_;
  std::vector<Vertex> topo_;
  std::vector<int> pos_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::vector<std::string> labels_;
};

enum class Direction : std::uint8_t { Unset, Forward, Backward };

/// Per-edge direction over a base graph. Forward means min -> max endpoint.
class Orientation {
public:
  Orientation() = default;
  /// All edges Unset.
  explicit Orientation(UndirectedGraph base);
  Orientation(UndirectedGraph base, std::vector<Direction> dirs);

  /// Every edge directed min -> max.
  static Orientation natural(UndirectedGraph base);
  /// Edges oriented along the given arcs; every base edge must be covered
  /// exactly once. Throws InputError.
  static Orientation from_arcs(UndirectedGraph base, std::span<const Edge> arcs);
  /// The orientation an acyclic digraph induces on its underlying graph.
  static Orientation of(const AcyclicDigraph &d);

  const UndirectedGraph &base() const { return base_; }
  std::span<const Direction> directions() const { return dirs_; }
  Direction direction(std::size_t edge) const { return dirs_[edge]; }
  void set(std::size_t edge, Direction d) { dirs_[edge] = d; }

  bool total() const;
  /// Oriented arcs (tail, head) of the set edges, in base edge order.
  std::vector<Edge> arcs() const;
  /// Acyclic digraph over the base vertex set. Throws InputError if partial,
  /// CycleError if cyclic.
  AcyclicDigraph to_digraph() const;

  friend bool operator==(const Orientation &, const Orientation &) = default;

private:
  UndirectedGraph base_;
  std::vector<Direction> dirs_;
};

enum class PathCount : std::uint8_t { Zero = 0, One = 1, Many = 2 };

/// Saturating counts of nontrivial directed paths between ordered pairs.
class PathCountMatrix {
public:
  /// Dynamic programming over the topological order.
  explicit PathCountMatrix(const AcyclicDigraph &d);

  int order() const { return n_; }
  PathCount at(Vertex from, Vertex to) const {
    return counts_[static_cast<std::size_t>(from) * n_ + to];
  }
  /// First (from, to) pair in row-major order with count Many.
  std::optional<Edge> first_many() const;

private:
  int n_ = 0;
  std::vector<PathCount> counts_;
};

/// BFS components, each ascending, ordered by their minimum vertex.
std::vector<std::vector<Vertex>> connected_components(const UndirectedGraph &g);

} // namespace shiftgraph
