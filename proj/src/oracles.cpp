#include "colorlab/oracles.hpp"

#include <algorithm>
#include <cstdlib>

namespace colorlab {

namespace {

int env_int(const char* name, int fallback) {
    const char* value = std::getenv(name);
    if (!value || !*value) return fallback;
    char* end = nullptr;
    long parsed = std::strtol(value, &end, 10);
    if (!end || *end != '\0' || parsed <= 0) return fallback;
    return static_cast<int>(parsed);
}

void check_limit(const Graph& g, int limit, const char* what) {
    if (g.vertex_count() > limit) {
        throw SizeLimitError(std::string(what) + ": graph has " +
                             std::to_string(g.vertex_count()) + " vertices, limit is " +
                             std::to_string(limit));
    }
}

using Mask = std::uint64_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
    std::vector<Mask> adj(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (int u : g.neighbors(v)) adj[v] |= Mask(1) << u;
    }
    return adj;
}

// Bron-Kerbosch with pivoting on the complement adjacency: maximal
// independent sets of g are maximal cliques of the complement.
void bron_kerbosch(const std::vector<Mask>& nonadj, Mask clique, Mask cand, Mask excluded,
                   std::vector<Mask>& out) {
    if (cand == 0 && excluded == 0) {
        out.push_back(clique);
        return;
    }
    Mask pool = cand | excluded;
    int pivot = std::countr_zero(pool);
    Mask best_cover = cand & nonadj[pivot];
    for (Mask rest = pool & (pool - 1); rest; rest &= rest - 1) {
        int u = std::countr_zero(rest);
        Mask cover = cand & nonadj[u];
        if (std::popcount(cover) > std::popcount(best_cover)) {
            pivot = u;
            best_cover = cover;
        }
    }
    Mask branch = cand & ~nonadj[pivot];
    while (branch) {
        int v = std::countr_zero(branch);
        Mask bit = Mask(1) << v;
        branch &= branch - 1;
        bron_kerbosch(nonadj, clique | bit, cand & nonadj[v], excluded & nonadj[v], out);
        cand &= ~bit;
        excluded |= bit;
    }
}

} // namespace

OracleLimits OracleLimits::from_env() {
    OracleLimits limits;
    limits.mis_limit = env_int("COLORLAB_MIS_LIMIT", limits.mis_limit);
    limits.chi_limit = env_int("COLORLAB_CHI_LIMIT", limits.chi_limit);
    limits.lp_limit = env_int("COLORLAB_LP_LIMIT", limits.lp_limit);
    return limits;
}

std::vector<VertexSet> enumerate_maximal_independent_sets(const Graph& g, int limit) {
    check_limit(g, std::min(limit, 63), "enumerate_maximal_independent_sets");
    const int n = g.vertex_count();
    if (n == 0) return {};
    std::vector<Mask> adj = adjacency_masks(g);
    Mask all = (n == 64) ? ~Mask(0) : ((Mask(1) << n) - 1);
    std::vector<Mask> nonadj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) nonadj[v] = all & ~adj[v] & ~(Mask(1) << v);
    std::vector<Mask> masks;
    bron_kerbosch(nonadj, 0, all, 0, masks);
    std::vector<VertexSet> result;
    result.reserve(masks.size());
    for (Mask m : masks) {
        VertexSet s;
        for (Mask rest = m; rest; rest &= rest - 1) s.push_back(std::countr_zero(rest));
        result.push_back(std::move(s));
    }
    std::sort(result.begin(), result.end());
    return result;
}

namespace {

// Backtracking k-colorability with the classic symmetry break: a vertex may
// only open one new color class beyond those already in use.
bool k_colorable(const Graph& g, const std::vector<int>& order, std::vector<int>& color, int k,
                 std::size_t at, int used) {
    if (at == order.size()) return true;
    int v = order[at];
    Mask forbidden = 0;
    for (int u : g.neighbors(v)) {
        if (color[u] >= 0) forbidden |= Mask(1) << color[u];
    }
    int tryable = std::min(k, used + 1);
    for (int c = 0; c < tryable; ++c) {
        if (forbidden & (Mask(1) << c)) continue;
        color[v] = c;
        if (k_colorable(g, order, color, k, at + 1, std::max(used, c + 1))) return true;
        color[v] = -1;
    }
    return false;
}

} // namespace

int chromatic_number(const Graph& g, int limit) {
    check_limit(g, limit, "chromatic_number");
    const int n = g.vertex_count();
    if (n == 0) return 0;
    if (g.edge_count() == 0) return 1;

    auto [og, degeneracy] = degeneracy_order(g);
    std::vector<int> greedy = greedy_coloring(og);
    int upper = 1 + *std::max_element(greedy.begin(), greedy.end());
    int lower = max_clique(g);
    if (lower == upper) return lower;

    // Search order: degeneracy order reversed (dense core first), colors
    // seeded with a maximum clique to cut symmetric branches.
    std::vector<int> order(og.order().rbegin(), og.order().rend());
    // Move a maximum clique to the front of the order.
    {
        VertexSet clique;
        for (int i = n - 1; i >= 0 && static_cast<int>(clique.size()) < lower; --i) {
            // Greedily rebuild one maximum clique via the search used in max_clique.
            // Cheap fallback: grow a clique greedily inside the reversed order.
            int v = order[static_cast<std::size_t>(n - 1 - i)];
            bool ok = true;
            for (int u : clique) {
                if (!g.has_edge(u, v)) {
                    ok = false;
                    break;
                }
            }
            if (ok) clique.push_back(v);
        }
        std::vector<int> rest;
        for (int v : order) {
            if (std::find(clique.begin(), clique.end(), v) == clique.end()) rest.push_back(v);
        }
        order.clear();
        order.insert(order.end(), clique.begin(), clique.end());
        order.insert(order.end(), rest.begin(), rest.end());
    }

    for (int k = lower; k < upper; ++k) {
        if (k > 63) break;  // color masks are 64-bit; upper bound applies anyway
        std::vector<int> color(static_cast<std::size_t>(n), -1);
        if (k_colorable(g, order, color, k, 0, 0)) return k;
    }
    return upper;
}

MaxWeightResult max_weight_independent_set(const Graph& g, const std::vector<Rational>& weights,
                                           int limit) {
    check_limit(g, std::min(limit, 63), "max_weight_independent_set");
    const int n = g.vertex_count();
    if (static_cast<int>(weights.size()) != n) {
        throw PreconditionError("weight vector length does not match vertex count");
    }
    for (const Rational& w : weights) {
        if (w < 0) throw PreconditionError("negative weight");
    }
    std::vector<Mask> adj = adjacency_masks(g);

    // Suffix sums bound what the remaining vertices can still contribute.
    std::vector<Rational> suffix(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int v = n - 1; v >= 0; --v) suffix[v] = suffix[v + 1] + weights[v];

    // The empty set is the initial incumbent, so pruning on <= is sound.
    Rational best_weight = 0;
    Mask best_set = 0;
    auto recurse = [&](auto&& self, int v, Mask chosen, Mask blocked, const Rational& acc) -> void {
        if (v == n) {
            if (acc > best_weight) {
                best_weight = acc;
                best_set = chosen;
            }
            return;
        }
        if (acc + suffix[v] <= best_weight) return;
        if (!(blocked & (Mask(1) << v))) {
            self(self, v + 1, chosen | (Mask(1) << v), blocked | adj[v], acc + weights[v]);
        }
        self(self, v + 1, chosen, blocked, acc);
    };
    recurse(recurse, 0, 0, 0, Rational(0));

    MaxWeightResult result;
    result.weight = best_weight;
    for (Mask rest = best_set; rest; rest &= rest - 1) {
        result.set.push_back(std::countr_zero(rest));
    }
    return result;
}

bool verify_weight_certificate(const Graph& g, const WeightCertificate& cert, int limit) {
    if (static_cast<int>(cert.weights.size()) != g.vertex_count()) {
        throw PreconditionError("certificate weight count does not match vertex count");
    }
    Rational total = 0;
    for (const Rational& w : cert.weights) {
        if (w < 0) throw PreconditionError("certificate has a negative weight");
        total += w;
    }
    if (total != 1) throw PreconditionError("certificate weights must sum to 1");
    return max_weight_independent_set(g, cert.weights, limit).weight <= cert.bound;
}

} // namespace colorlab
