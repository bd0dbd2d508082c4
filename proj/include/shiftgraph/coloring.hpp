#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "shiftgraph/constructors.hpp"
#include "shiftgraph/graph.hpp"

namespace shiftgraph {

/// Proper vertex coloring with colors in [0, palette). Propriety is checked
/// on construction (InputError).
class Coloring {
public:
  Coloring() = default;
  Coloring(const UndirectedGraph &g, std::vector<int> colors, int palette);
  /// Palette = max color + 1.
  Coloring(const UndirectedGraph &g, std::vector<int> colors);

  int palette() const { return palette_; }
  std::span<const int> colors() const { return colors_; }
  int operator[](Vertex v) const { return colors_[v]; }
  int colors_used() const;

  friend bool operator==(const Coloring &, const Coloring &) = default;

private:
  std::vector<int> colors_;
  int palette_ = 0;
};

bool is_proper(const UndirectedGraph &g, std::span<const int> colors);

/// Exact C(k, floor(k/2)).
std::uint64_t central_binomial(int k);
/// Least k >= 1 with C(k, floor(k/2)) >= c. k_star(1) == 1.
int k_star(int c);

/// All floor(k/2)-subsets of {0..k-1} as bitmasks, colexicographic order.
class SubsetPalette {
public:
  explicit SubsetPalette(int k);

  int k() const { return k_; }
  std::span<const std::uint32_t> subsets() const { return subsets_; }

private:
  int k_;
  std::vector<std::uint32_t> subsets_;
};

/// Proper k*(c)-coloring of the underlying L(g), where c is the number of
/// colors `base` uses: base colors map injectively onto half-size subsets
/// and arc uv gets the smallest element of S(u) \ S(v).
Coloring log_color_line_digraph(const AcyclicDigraph &g, const Coloring &base);

/// Colors v by the set of colors on its bag; sinks (empty bags) share one
/// extra color. `line_coloring` colors the underlying L(g).
Coloring lift_coloring(const AcyclicDigraph &g, const Coloring &line_coloring);

/// An induced K_{a,b} in L(t_prime): `left` are in-arcs of `center`,
/// `right` are its out-arcs (line-digraph vertex ids).
struct KabWitness {
  Vertex center = 0;
  std::vector<Vertex> left;
  std::vector<Vertex> right;
};

struct KabReport {
  int n = 0;
  int a = 0;
  int b = 0;
  std::vector<Vertex> left_side;  ///< out-degree <= b - 1
  std::vector<Vertex> right_side; ///< out-degree >= b
  int left_colors = 0;
  int right_colors = 0;
  int base_colors = 0;
  int k_star = 0;
  int final_palette = 0;
  bool within_bounds = false;
  std::optional<KabWitness> witness;
};

struct KabResult {
  LineDigraph line;
  Coloring base; ///< coloring of the underlying t_prime
  Coloring coloring; ///< coloring of H = L(t_prime)
  KabReport report;
};

/// Colors H = L(t_prime): greedy on the low out-degree side in decreasing
/// index order and on the high side in increasing index order with disjoint
/// palettes, then the log coloring on top. If the high side needs more than
/// `a` colors, a K_{a,b} witness is reported. t_prime must have arcs i -> j
/// with i < j only.
KabResult color_kab_free(const AcyclicDigraph &t_prime, int a, int b);

/// Exhaustive check that g has no induced K_{a,b}. Desk-scale only.
bool is_kab_free(const UndirectedGraph &g, int a, int b);

/// True iff `left` and `right` induce a complete bipartite graph in g.
bool is_induced_kab(const UndirectedGraph &g, std::span<const Vertex> left,
                    std::span<const Vertex> right);

/// Edge from lower color to higher color.
Orientation coloring_to_orientation(const UndirectedGraph &g, const Coloring &c);

/// color(v) = edges on the longest directed path ending at v.
Coloring orientation_to_coloring(const Orientation &o);

/// Edges on the longest directed path of an acyclic digraph.
int longest_path_length(const AcyclicDigraph &d);

} // namespace shiftgraph
