#pragma once

#include <cstddef>
#include <vector>

#include "shiftgraph/graph.hpp"

namespace shiftgraph {

/// Partition of the line digraph's vertices by the topological position of
/// the tail of their underlying arc. Bags are 0-based: bag i holds the
/// out-arcs of parent.topo()[i]; the last bag is always empty.
class BagDecomposition {
public:
  BagDecomposition() = default;
  BagDecomposition(std::vector<std::vector<Vertex>> bags, std::vector<int> index)
      : bags_(std::move(bags)), index_(std::move(index)) {}

  int bag_count() const { return static_cast<int>(bags_.size()); }
  std::span<const Vertex> bag(int i) const { return bags_[i]; }
  /// Bag of a line-digraph vertex.
  int index(Vertex u) const { return index_[u]; }

private:
  std::vector<std::vector<Vertex>> bags_;
  std::vector<int> index_;
};

struct LineDigraph {
  AcyclicDigraph digraph;
  BagDecomposition bags;
};

/// Arcs (i, j) for all i < j; identity topological order. Requires n >= 1.
AcyclicDigraph acyclic_tournament(int n);

/// Vertex u of the result is the arc g.arcs()[u], labeled "(a,b)" with g's
/// labels; arcs go from ab to bc. The topological order sorts vertices by
/// bag index, ties by vertex id.
LineDigraph line_digraph(const AcyclicDigraph &g);

/// `times`-fold line digraph. Throws SizeCapError as soon as an iterate
/// would have more than `cap` vertices.
AcyclicDigraph iterate_line_digraph(const AcyclicDigraph &g, int times,
                                    std::size_t cap = kDefaultSizeCap);

/// G_{n,k} built from increasing k-tuples over {1..n} (lexicographic vertex
/// ids, tuple labels like "(2,5)"). Before returning, the result is checked
/// against the undirected L^{k-1}(T_n); a mismatch throws InvariantError.
/// Requires k >= 2 and n >= 3 for k = 2, n > 2k otherwise.
UndirectedGraph shift_graph(int n, int k = 2,
                            std::size_t cap = kDefaultSizeCap);

/// Id of the vertex (i, j), 0 <= i < j < n, in shift_graph(n, 2).
Vertex shift_pair_id(int n, Vertex i, Vertex j);

struct InducedLineSubdigraph {
  AcyclicDigraph line;
  /// line vertex -> vertex of shift_graph(n, 2)
  std::vector<Vertex> embedding;
};

/// L(t_prime) for a subdigraph of T_n (every arc i -> j with i < j < n),
/// with its embedding into G_{n,2}. The image is checked to be induced.
InducedLineSubdigraph induced_line_subdigraph(const AcyclicDigraph &t_prime,
                                              int n);

struct ZykovGraph {
  UndirectedGraph graph;
  /// Copies keep their recursive orientation, apex edges point into the apex.
  Orientation orientation;
};

/// Zykov graph Z_n: disjoint Z_1..Z_{n-1} plus one apex per transversal.
/// The returned orientation is verified to have the AOP property.
ZykovGraph zykov(int n, std::size_t cap = kDefaultSizeCap);

/// Odd cycle u_1..u_g plus twins u'_i adjacent to u_{i-1} and u_{i+1}.
/// Requires odd g >= 5. Vertex i < g is u_{i+1}, vertex g + i is u'_{i+1}.
UndirectedGraph odd_girth_gadget(int g);

/// The Brinkmann graph: 21 vertices, 4-regular, girth 5, chromatic number 4.
UndirectedGraph brinkmann_graph();

/// A path of three edges a - b - c - d, stored with a < d.
struct ThreePath {
  Vertex a, b, c, d;
  friend auto operator<=>(const ThreePath &, const ThreePath &) = default;
};

/// All 3-edge paths of g, each once (a < d), lexicographic.
std::vector<ThreePath> three_edge_paths(const UndirectedGraph &g);

/// True iff g has a vertex outside the path adjacent to both of its ends.
bool in_five_cycle(const UndirectedGraph &g, const ThreePath &p);

/// Adds a degree-2 apex on the ends of every 3-edge path of g0 that is not
/// yet in a 5-cycle, scanning paths in canonical order. Requires girth 5 and
/// chromatic number >= 4 (InputError otherwise). Apexes are labeled "q<k>".
UndirectedGraph girth5_non_aop(const UndirectedGraph &g0);

// Standalone predicates for the five structural clauses of a line digraph
// with its bag decomposition. Each returns true when the clause holds.
namespace structure {
/// (i) every bag is independent.
bool bags_independent(const AcyclicDigraph &g, const LineDigraph &l);
/// (ii) adjacent line vertices come from adjacent bag vertices, and arcs go
/// from the smaller bag index to the larger.
bool adjacency_respects_index(const AcyclicDigraph &g, const LineDigraph &l);
/// (iii) the neighbors of u with index >= I(u) share one bag.
bool unique_larger_bag(const AcyclicDigraph &g, const LineDigraph &l);
/// (iv) for adjacent bag vertices i < j, exactly one vertex of B(i) sees
/// all of B(j) and no other vertex of B(i) sees any of B(j).
bool unique_parent(const AcyclicDigraph &g, const LineDigraph &l);
/// (v) two smaller-index neighbors of u see all of B(I(u)) and are
/// non-adjacent.
bool smaller_neighbors_independent(const AcyclicDigraph &g, const LineDigraph &l);
} // namespace structure

} // namespace shiftgraph
