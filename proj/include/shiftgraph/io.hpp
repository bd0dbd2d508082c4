#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "shiftgraph/graph.hpp"

namespace shiftgraph {

class Coloring;

using AnyGraph = std::variant<UndirectedGraph, AcyclicDigraph>;

// JSON graph schema:
//   {"n": <int>, "directed": <bool>, "edges": [[u, v], ...], "labels": {"<id>": "<str>", ...}}
// "labels" is optional. For directed graphs [u, v] is the arc u -> v.
// Serialized output is canonical: keys in the order above, edges sorted,
// a single space after every ':' and ','.

/// Throws InputError on malformed text or invalid graphs, CycleError when a
/// directed arc set is cyclic.
AnyGraph graph_from_json(std::string_view text);
UndirectedGraph undirected_from_json(std::string_view text);
AcyclicDigraph digraph_from_json(std::string_view text);

std::string to_json(const UndirectedGraph &g);
std::string to_json(const AcyclicDigraph &g);
std::string to_json(const AnyGraph &g);

/// {"edges": [[u, v], ...]} with each edge listed tail first.
std::string orientation_to_json(const Orientation &o);
Orientation orientation_from_json(const UndirectedGraph &base,
                                  std::string_view text);

/// {"palette": k, "colors": {"0": c0, "1": c1, ...}}
std::string coloring_to_json(const Coloring &c);
/// Reads {"palette": k, "colors": {"0": c, ...}}; palette is optional.
Coloring coloring_from_json(const UndirectedGraph &g, std::string_view text);

std::string to_dot(const UndirectedGraph &g);
std::string to_dot(const AcyclicDigraph &g);
/// Unset edges of a partial orientation are drawn with dir=none.
std::string to_dot(const Orientation &o);

} // namespace shiftgraph
