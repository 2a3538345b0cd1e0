#ifndef COLORLAB_GRAPH_HPP
#define COLORLAB_GRAPH_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "colorlab/errors.hpp"

namespace colorlab {

// Vertex ids are dense integers 0..n-1. A VertexSet is a strictly increasing
// vector of vertex ids.
using VertexSet = std::vector<int>;

bool is_canonical_vertex_set(const VertexSet& s, int n);

// Undirected simple graph with sorted adjacency lists. Immutable after
// construction; construction validates no self-loops and no duplicate edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(static_cast<std::size_t>(check_n(n))) {}
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }
    std::span<const int> neighbors(int v) const { return adj_[check_vertex(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[check_vertex(v)].size()); }
    bool has_edge(int u, int v) const;
    std::vector<std::pair<int, int>> edges() const;  // u < v, sorted

    // Subgraph induced on `vertices` (a VertexSet). Vertex i of the result is
    // vertices[i], so relative order is preserved.
    Graph induced_subgraph(const VertexSet& vertices) const;

    bool operator==(const Graph& other) const = default;

private:
    static int check_n(int n);
    int check_vertex(int v) const;

    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
};

// A graph together with a vertex order witnessing a left-degree bound d and,
// optionally, a left-edge bound d^2/f. The bounds are validated on
// construction; violations are construction errors, never silent clamps.
class OrderedGraph {
public:
    OrderedGraph(Graph g, std::vector<int> order, double d,
                 std::optional<double> f = std::nullopt);

    const Graph& graph() const { return graph_; }
    int vertex_count() const { return graph_.vertex_count(); }
    // order()[i] is the vertex at position i; position_of(v) is its inverse.
    const std::vector<int>& order() const { return order_; }
    int vertex_at(int position) const { return order_[check_position(position)]; }
    int position_of(int v) const { return position_[v]; }
    double d() const { return d_; }
    std::optional<double> f() const { return f_; }

    // Neighbors of the vertex at `position` among earlier positions (returned
    // as vertex ids, sorted).
    VertexSet left_neighborhood(int position) const;
    // Number of graph edges with both endpoints in that left-neighborhood.
    int left_edge_count(int position) const;
    int max_left_degree() const;

    // Ordered induced subgraph on `vertices`; keeps the relative order and
    // the declared (d, f). Vertex ids are remapped to 0..|vertices|-1 in
    // left-over order of `vertices` (which must be sorted).
    OrderedGraph induced(const VertexSet& vertices) const;
    // Ordered induced subgraph on the first `count` positions.
    OrderedGraph prefix(int count) const;

private:
    int check_position(int position) const;

    Graph graph_;
    std::vector<int> order_;
    std::vector<int> position_;
    double d_;
    std::optional<double> f_;
};

// Smallest-last order: repeatedly delete a minimum-degree vertex. The
// resulting maximum left-degree is the exact degeneracy.
struct DegeneracyResult {
    OrderedGraph ordered;
    int degeneracy;
};
DegeneracyResult degeneracy_order(const Graph& g);

bool is_independent(const Graph& g, const VertexSet& s);

// Some vertex adjacent to every member of s, or nullopt. s must be nonempty.
std::optional<int> common_neighbor(const Graph& g, const VertexSet& s);

// Whether g contains K_r as a subgraph. Exhaustive search; each candidate
// clique is located inside the left-neighborhood of its last vertex in a
// degeneracy order, which keeps the search space small on sparse graphs.
bool contains_clique(const Graph& g, int r);

// Exact clique number.
int max_clique(const Graph& g);

// First-fit coloring along the stored order; uses at most max_left_degree+1
// colors. Returns color per vertex id.
std::vector<int> greedy_coloring(const OrderedGraph& og);

// Whether `color` (indexed by vertex id) is a proper complete coloring.
bool is_proper_coloring(const Graph& g, const std::vector<int>& color);

} // namespace colorlab

#endif
