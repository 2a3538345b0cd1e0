#ifndef COLORLAB_ZOO_HPP
#define COLORLAB_ZOO_HPP

#include "colorlab/graph.hpp"

namespace colorlab::zoo {

Graph edgeless(int n);
Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
Graph star(int leaves);
Graph complete_bipartite(int a, int b);
Graph petersen();
Graph grotzsch();

// Named lookup used by the CLI ("k5", "c5", "p4", "petersen", ...).
// Returns nullopt for unknown names.
std::optional<Graph> by_name(const std::string& name);

} // namespace colorlab::zoo

#endif
