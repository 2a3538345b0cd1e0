#include "colorlab/graph.hpp"

#include <algorithm>
#include <limits>

namespace colorlab {

bool is_canonical_vertex_set(const VertexSet& s, int n) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= n) return false;
        if (i > 0 && s[i] <= s[i - 1]) return false;
    }
    return true;
}

int Graph::check_n(int n) {
    if (n < 0) throw GraphError("vertex count must be nonnegative");
    return n;
}

int Graph::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count()) {
        throw GraphError("vertex id " + std::to_string(v) + " out of range [0, " +
                         std::to_string(vertex_count()) + ")");
    }
    return v;
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges)
    : adj_(static_cast<std::size_t>(check_n(n))) {
    for (auto [u, v] : edges) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
            throw GraphError("duplicate edge");
        }
    }
    edge_count_ = static_cast<int>(edges.size());
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(v);
    const auto& nbrs = adj_[check_vertex(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> result;
    result.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < vertex_count(); ++u) {
        for (int v : adj_[u]) {
            if (u < v) result.emplace_back(u, v);
        }
    }
    return result;
}

Graph Graph::induced_subgraph(const VertexSet& vertices) const {
    if (!is_canonical_vertex_set(vertices, vertex_count())) {
        throw GraphError("induced_subgraph: not a canonical vertex set");
    }
    std::vector<int> new_id(static_cast<std::size_t>(vertex_count()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) new_id[vertices[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int u : vertices) {
        for (int v : adj_[u]) {
            if (u < v && new_id[v] >= 0) edges.emplace_back(new_id[u], new_id[v]);
        }
    }
    return Graph(static_cast<int>(vertices.size()), edges);
}

OrderedGraph::OrderedGraph(Graph g, std::vector<int> order, double d, std::optional<double> f)
    : graph_(std::move(g)), order_(std::move(order)), d_(d), f_(f) {
    const int n = graph_.vertex_count();
    if (static_cast<int>(order_.size()) != n) {
        throw GraphError("order length does not match vertex count");
    }
    position_.assign(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        int v = order_[i];
        if (v < 0 || v >= n || position_[v] != -1) {
            throw GraphError("order is not a permutation of 0..n-1");
        }
        position_[v] = i;
    }
    if (d_ < 0) throw GraphError("left-degree bound d must be nonnegative");
    if (f_ && !(*f_ > 2.0 && *f_ < d_ * d_)) {
        throw GraphError("left-edge parameter f must lie in (2, d^2)");
    }
    for (int i = 0; i < n; ++i) {
        VertexSet left = left_neighborhood(i);
        if (static_cast<double>(left.size()) > d_) {
            throw GraphError("order violates left-degree bound at position " + std::to_string(i));
        }
        if (f_) {
            int inner = left_edge_count(i);
            if (static_cast<double>(inner) > d_ * d_ / *f_) {
                throw GraphError("order violates left-edge bound at position " + std::to_string(i));
            }
        }
    }
}

int OrderedGraph::check_position(int position) const {
    if (position < 0 || position >= vertex_count()) {
        throw PreconditionError("position " + std::to_string(position) + " out of range");
    }
    return position;
}

VertexSet OrderedGraph::left_neighborhood(int position) const {
    check_position(position);
    VertexSet result;
    int v = order_[position];
    for (int u : graph_.neighbors(v)) {
        if (position_[u] < position) result.push_back(u);
    }
    std::sort(result.begin(), result.end());
    return result;
}

int OrderedGraph::left_edge_count(int position) const {
    VertexSet left = left_neighborhood(position);
    int count = 0;
    for (std::size_t a = 0; a < left.size(); ++a) {
        for (std::size_t b = a + 1; b < left.size(); ++b) {
            if (graph_.has_edge(left[a], left[b])) ++count;
        }
    }
    return count;
}

int OrderedGraph::max_left_degree() const {
    int best = 0;
    for (int i = 0; i < vertex_count(); ++i) {
        best = std::max(best, static_cast<int>(left_neighborhood(i).size()));
    }
    return best;
}

OrderedGraph OrderedGraph::induced(const VertexSet& vertices) const {
    Graph sub = graph_.induced_subgraph(vertices);
    // New id i corresponds to vertices[i]; order new ids by old positions.
    std::vector<int> ids(vertices.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
        return position_[vertices[a]] < position_[vertices[b]];
    });
    return OrderedGraph(std::move(sub), std::move(ids), d_, f_);
}

OrderedGraph OrderedGraph::prefix(int count) const {
    if (count < 0 || count > vertex_count()) throw PreconditionError("prefix length out of range");
    VertexSet vertices(order_.begin(), order_.begin() + count);
    std::sort(vertices.begin(), vertices.end());
    return induced(vertices);
}

DegeneracyResult degeneracy_order(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> degree(static_cast<std::size_t>(n));
    std::vector<bool> removed(static_cast<std::size_t>(n), false);
    // Bucket queue over current degrees.
    int max_degree = 0;
    for (int v = 0; v < n; ++v) {
        degree[v] = g.degree(v);
        max_degree = std::max(max_degree, degree[v]);
    }
    std::vector<std::vector<int>> bucket(static_cast<std::size_t>(max_degree + 1));
    for (int v = 0; v < n; ++v) bucket[degree[v]].push_back(v);

    std::vector<int> removal_order;
    removal_order.reserve(static_cast<std::size_t>(n));
    int degeneracy = 0;
    int cursor = 0;
    for (int step = 0; step < n; ++step) {
        cursor = 0;
        int v = -1;
        while (true) {
            auto& b = bucket[cursor];
            while (!b.empty() && (removed[b.back()] || degree[b.back()] != cursor)) b.pop_back();
            if (!b.empty()) {
                v = b.back();
                b.pop_back();
                break;
            }
            ++cursor;
        }
        degeneracy = std::max(degeneracy, degree[v]);
        removed[v] = true;
        removal_order.push_back(v);
        for (int u : g.neighbors(v)) {
            if (!removed[u]) {
                --degree[u];
                bucket[degree[u]].push_back(u);
            }
        }
    }
    // Smallest-last: the first vertex removed goes last in the order.
    std::vector<int> order(removal_order.rbegin(), removal_order.rend());
    return DegeneracyResult{OrderedGraph(g, std::move(order), static_cast<double>(degeneracy)),
                            degeneracy};
}

bool is_independent(const Graph& g, const VertexSet& s) {
    if (!is_canonical_vertex_set(s, g.vertex_count())) {
        throw PreconditionError("is_independent: not a canonical vertex set");
    }
    for (std::size_t a = 0; a < s.size(); ++a) {
        for (std::size_t b = a + 1; b < s.size(); ++b) {
            if (g.has_edge(s[a], s[b])) return false;
        }
    }
    return true;
}

std::optional<int> common_neighbor(const Graph& g, const VertexSet& s) {
    if (s.empty()) throw PreconditionError("common_neighbor: empty set");
    if (!is_canonical_vertex_set(s, g.vertex_count())) {
        throw PreconditionError("common_neighbor: not a canonical vertex set");
    }
    // Intersect adjacency lists, starting from the lowest-degree member.
    int pivot = s[0];
    for (int v : s) {
        if (g.degree(v) < g.degree(pivot)) pivot = v;
    }
    for (int candidate : g.neighbors(pivot)) {
        bool ok = true;
        for (int v : s) {
            if (!g.has_edge(candidate, v)) {
                ok = false;
                break;
            }
        }
        if (ok) return candidate;
    }
    return std::nullopt;
}

namespace {

// Largest clique inside g[candidates], branch and bound with a size cutoff:
// stops early once a clique of size `enough` is found (pass INT_MAX for the
// exact maximum).
int clique_search(const Graph& g, std::vector<int> candidates, int enough) {
    if (candidates.empty()) return 0;
    // Order candidates by degree within the candidate set, highest first.
    int best = 0;
    std::vector<int> current;
    // Recursive lambda over (clique so far, remaining candidates).
    auto recurse = [&](auto&& self, const std::vector<int>& cands) -> void {
        if (best >= enough) return;
        if (current.size() + cands.size() <= static_cast<std::size_t>(best)) return;
        if (cands.empty()) {
            best = std::max(best, static_cast<int>(current.size()));
            return;
        }
        for (std::size_t i = 0; i < cands.size(); ++i) {
            if (current.size() + (cands.size() - i) <= static_cast<std::size_t>(best)) return;
            int v = cands[i];
            std::vector<int> next;
            for (std::size_t j = i + 1; j < cands.size(); ++j) {
                if (g.has_edge(v, cands[j])) next.push_back(cands[j]);
            }
            current.push_back(v);
            self(self, next);
            current.pop_back();
            if (best >= enough) return;
        }
    };
    recurse(recurse, candidates);
    return best;
}

} // namespace

bool contains_clique(const Graph& g, int r) {
    if (r < 1) throw PreconditionError("clique size must be at least 1");
    if (r == 1) return g.vertex_count() >= 1;
    if (r == 2) return g.edge_count() >= 1;
    auto [og, degeneracy] = degeneracy_order(g);
    if (degeneracy < r - 1) return false;
    for (int i = 0; i < g.vertex_count(); ++i) {
        VertexSet left = og.left_neighborhood(i);
        if (static_cast<int>(left.size()) < r - 1) continue;
        if (clique_search(g, left, r - 1) >= r - 1) return true;
    }
    return false;
}

int max_clique(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    if (g.edge_count() == 0) return 1;
    auto [og, degeneracy] = degeneracy_order(g);
    int best = 1;
    for (int i = 0; i < g.vertex_count(); ++i) {
        VertexSet left = og.left_neighborhood(i);
        if (static_cast<int>(left.size()) < best) continue;
        best = std::max(best, 1 + clique_search(g, left, std::numeric_limits<int>::max()));
    }
    return best;
}

std::vector<int> greedy_coloring(const OrderedGraph& og) {
    const int n = og.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<char> used;
    for (int i = 0; i < n; ++i) {
        int v = og.vertex_at(i);
        used.assign(static_cast<std::size_t>(i) + 1, 0);
        for (int u : og.graph().neighbors(v)) {
            if (color[u] >= 0 && color[u] <= i) used[color[u]] = 1;
        }
        int c = 0;
        while (used[c]) ++c;
        color[v] = c;
    }
    return color;
}

bool is_proper_coloring(const Graph& g, const std::vector<int>& color) {
    if (static_cast<int>(color.size()) != g.vertex_count()) return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (color[v] < 0) return false;
        for (int u : g.neighbors(v)) {
            if (color[u] == color[v]) return false;
        }
    }
    return true;
}

} // namespace colorlab
