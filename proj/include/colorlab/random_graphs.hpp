#ifndef COLORLAB_RANDOM_GRAPHS_HPP
#define COLORLAB_RANDOM_GRAPHS_HPP

#include <cstdint>

#include "colorlab/graph.hpp"

namespace colorlab {

// Erdos-Renyi G(n, p).
Graph random_gnp(int n, double p, std::uint64_t seed);

// Random triangle-free graph whose creation order witnesses left-degree <= d:
// vertex i picks up to d earlier vertices forming an independent set. Returns
// the graph ordered by creation order with declared bound d.
OrderedGraph random_triangle_free_left_bounded(int n, int d, std::uint64_t seed);

// Random graph with left-degree <= d under creation order and a declared
// left-edge parameter f in (2, d^2) computed from the realized left-edge
// counts (f = d^2 / max left-edge count, or just below d^2 when every
// left-neighborhood is independent). Requires d >= 2.
OrderedGraph random_left_bounded_with_f(int n, int d, double edge_bias, std::uint64_t seed);

} // namespace colorlab

#endif
