#pragma once

#include <cstdint>
#include <random>

#include "shiftgraph/graph.hpp"

// Slow reference implementations used to cross-check the real algorithms
// on small instances, plus seeded random fixtures.
namespace shiftgraph::oracle {

/// AOP check by enumerating every simple directed path.
bool aop_by_path_enumeration(const Orientation &o);

/// Tries all 2^|E| orientations. Requires |E| <= 30.
bool has_aop_by_enumeration(const UndirectedGraph &g);

/// Smallest k admitting one of the k^n colorings.
int chromatic_by_enumeration(const UndirectedGraph &g);

/// Maximum over vertex subsets of the induced minimum degree.
int degeneracy_by_subsets(const UndirectedGraph &g);

/// Each pair i < j of a random permutation becomes an arc with probability p.
AcyclicDigraph random_acyclic_digraph(std::mt19937_64 &rng, int n, double p);

/// Keeps each arc of g independently with probability p.
AcyclicDigraph random_subdigraph(std::mt19937_64 &rng, const AcyclicDigraph &g, double p);

UndirectedGraph random_graph(std::mt19937_64 &rng, int n, double p);

} // namespace shiftgraph::oracle
