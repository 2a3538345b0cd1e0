#include "colorlab/random_graphs.hpp"

#include <algorithm>
#include <numeric>

#include "colorlab/rng.hpp"

namespace colorlab {

Graph random_gnp(int n, double p, std::uint64_t seed) {
    SplitMix rng(derive_seed(seed, Stream::generator, 0));
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.next_u01() < p) edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

namespace {

std::vector<int> identity_order(int n) {
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    return order;
}

} // namespace

OrderedGraph random_triangle_free_left_bounded(int n, int d, std::uint64_t seed) {
    if (d < 1) throw PreconditionError("d must be at least 1");
    SplitMix rng(derive_seed(seed, Stream::generator, 1));
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    std::vector<std::pair<int, int>> edges;
    auto adjacent = [&](int a, int b) {
        return std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end();
    };
    for (int i = 1; i < n; ++i) {
        int want = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(d) + 1));
        want = std::min(want, i);
        std::vector<int> candidates(static_cast<std::size_t>(i));
        std::iota(candidates.begin(), candidates.end(), 0);
        // Shuffle, then take candidates while the picked set stays independent.
        for (int a = i - 1; a > 0; --a) {
            int b = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(a) + 1));
            std::swap(candidates[a], candidates[b]);
        }
        std::vector<int> picked;
        for (int u : candidates) {
            if (static_cast<int>(picked.size()) == want) break;
            bool ok = true;
            for (int w : picked) {
                if (adjacent(u, w)) {
                    ok = false;
                    break;
                }
            }
            if (ok) picked.push_back(u);
        }
        for (int u : picked) {
            adj[i].push_back(u);
            adj[u].push_back(i);
            edges.emplace_back(u, i);
        }
    }
    return OrderedGraph(Graph(n, edges), identity_order(n), static_cast<double>(d));
}

OrderedGraph random_left_bounded_with_f(int n, int d, double edge_bias, std::uint64_t seed) {
    if (d < 2) throw PreconditionError("d must be at least 2");
    SplitMix rng(derive_seed(seed, Stream::generator, 2));
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> left(static_cast<std::size_t>(n));
    for (int i = 1; i < n; ++i) {
        std::vector<int> candidates(static_cast<std::size_t>(i));
        std::iota(candidates.begin(), candidates.end(), 0);
        for (int a = i - 1; a > 0; --a) {
            int b = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(a) + 1));
            std::swap(candidates[a], candidates[b]);
        }
        int want = std::min(i, d);
        for (int k = 0; k < want; ++k) {
            if (rng.next_u01() < edge_bias) {
                left[i].push_back(candidates[k]);
                edges.emplace_back(candidates[k], i);
            }
        }
    }
    Graph g(n, edges);
    // Realized worst left-edge count determines the declared f.
    int worst = 0;
    for (int i = 0; i < n; ++i) {
        int inner = 0;
        for (std::size_t a = 0; a < left[i].size(); ++a) {
            for (std::size_t b = a + 1; b < left[i].size(); ++b) {
                if (g.has_edge(left[i][a], left[i][b])) ++inner;
            }
        }
        worst = std::max(worst, inner);
    }
    double dd = static_cast<double>(d);
    double f = worst > 0 ? dd * dd / worst : dd * dd * (1.0 - 1e-9);
    // The construction guarantees worst <= C(d,2) < d^2/2, so f > 2 holds.
    f = std::min(f, dd * dd * (1.0 - 1e-9));
    return OrderedGraph(std::move(g), identity_order(n), dd, f);
}

} // namespace colorlab
