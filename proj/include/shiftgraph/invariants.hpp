#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "shiftgraph/coloring.hpp"
#include "shiftgraph/graph.hpp"

namespace shiftgraph {


/// std::nullopt stands for an infinite girth (forests, bipartite graphs).
using Length = std::optional<int>;

/// Shortest cycle length, by BFS from every vertex.
Length girth(const UndirectedGraph &g);

/// Shortest odd cycle length via BFS in the bipartite double cover.
Length odd_girth(const UndirectedGraph &g);

/// A shortest odd cycle as a vertex list (not closed), empty if bipartite.
std::vector<Vertex> shortest_odd_cycle(const UndirectedGraph &g);

/// Simple odd cycle on walk vertices. `walk` is closed (first == last) and
/// has odd length. Throws InputError otherwise.
std::vector<Vertex> extract_odd_cycle(const UndirectedGraph &g,
                                      std::vector<Vertex> walk);

bool triangle_free(const UndirectedGraph &g);

/// Exact, branch and bound with greedy-coloring bounds.
int clique_number(const UndirectedGraph &g);

struct DegeneracyCertificate {
  std::vector<Vertex> order;
  /// Indexed by vertex: neighbors placed earlier in `order`.
  std::vector<int> back_degrees;
  int degeneracy = 0;
};

/// Smallest-last ordering (min degree removal, ties by id).
DegeneracyCertificate degeneracy(const UndirectedGraph &g);

/// Back-degrees along a prescribed permutation. Throws InputError if
/// `order` is not a permutation of the vertices.
DegeneracyCertificate back_degree_certificate(const UndirectedGraph &g,
                                              std::span<const Vertex> order);

inline constexpr int kDefaultChromaticCap = 100;

/// Exact chromatic number with a witness coloring. Throws SizeCapError when
/// the graph has more than `cap` vertices.
std::pair<int, Coloring> chromatic_number(const UndirectedGraph &g,
                                          int cap = kDefaultChromaticCap);

/// A proper coloring with at most k colors if one exists. Backtracking in
/// DSATUR order; colors are introduced in order.
std::optional<std::vector<int>> k_coloring(const UndirectedGraph &g, int k);

} // namespace shiftgraph
