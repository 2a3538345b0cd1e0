#ifndef COLORLAB_CONSTRUCTIONS_HPP
#define COLORLAB_CONSTRUCTIONS_HPP

#include <functional>

#include "colorlab/fractional.hpp"
#include "colorlab/game.hpp"

namespace colorlab {

using BuilderFactory = std::function<std::unique_ptr<BuilderStrategy>()>;

// The strategy-tree graph of a deterministic Builder: one vertex per valid
// Painter color sequence over palette [d] of length <= N-1, an edge from each
// vertex to the targets of the Builder's move in the game its label defines.
// Vertex ids follow the (length, lexicographic) order of labels, so the
// identity order witnesses d-degeneracy.
struct StrategyTreeResult {
    Graph graph;
    std::vector<std::vector<int>> labels;  // label of each vertex
    int d = 0, r = 0, N = 0;
    // Number of valid length-N sequences; 0 means the Builder beats every
    // palette-d Painter within N rounds, so chi(graph) = d+1.
    int open_leaves = 0;

    OrderedGraph by_length_order() const;  // validates the d bound
};

StrategyTreeResult strategy_tree_graph(const BuilderFactory& factory, int d, int r, int N,
                                       bool normalize_moves = true);

// The recursive blow-up: level 1 is K_1; level k+1 takes d disjoint copies of
// level k and, for every tuple picking one vertex per copy, a fresh copy of
// gamma joined completely to the tuple. The construction order (copies first,
// then gamma blocks, each block in gamma's degeneracy order) witnesses
// (d + degeneracy(gamma))-degeneracy.
struct ZykovLikeResult {
    Graph graph;
    int level = 0;
    int d = 0;
    Graph gamma;
    std::vector<int> order;                        // construction order
    std::vector<int> copy_of;                      // top-level copy index, -1 in a gamma block
    std::vector<long long> block_of;               // tuple index of the gamma block, -1 in copies
    std::vector<unsigned long long> predicted_sizes;  // levels 1..level via the recurrence
};

// Predicted vertex count of the level-`level` graph; throws SizeLimitError
// (with the prediction in the message) if it exceeds `limit`.
unsigned long long zykov_predicted_size(int gamma_size, int d, int level,
                                        unsigned long long limit = 1000000);

ZykovLikeResult zykov_like(const Graph& gamma, int d, int level,
                           unsigned long long size_limit = 1000000);

// Exact check of the fractional-chromatic recursion between levels n and n+1,
// plus the proof-built dual weighting on level n+1 verified as a weight
// certificate.
struct FractionalRecursionReport {
    int level = 0;
    Rational chi_f_gamma, chi_f_level, chi_f_next;
    Rational rhs;  // (1/(d+1)) (d/chi_f(G_n) + (1/chi_f(gamma)) (1 - 1/chi_f(G_n))^d)
    bool inequality_holds = false;  // 1/chi_f(G_{n+1}) <= rhs, exact
    bool monotone = false;          // chi_f(G_n) <= chi_f(G_{n+1})
    WeightCertificate certificate;  // built from the proof's product weighting
    Rational certified_bound;       // the certificate's bound (max IS weight allowed)
    bool certificate_valid = false;
};

FractionalRecursionReport check_fractional_recursion(const Graph& gamma, int d, int level,
                                                     int lp_limit = OracleLimits{}.lp_limit);

// Trajectory of d / chi_f(G_{gamma,n}) against the limit threshold
// log(d / chi_f(gamma) + 3). Informational: the threshold concerns the limit,
// so finite levels are only reported, never failed.
struct RecursionLemmaReport {
    int d = 0;
    double threshold = 0.0;
    std::vector<Rational> chi_f_by_level;  // levels 1..deepest computed
    std::vector<double> ratio;             // d / chi_f per level
    bool finite_level_within_threshold = false;
};

RecursionLemmaReport check_recursion_lemma(const Graph& gamma, int d, int max_level,
                                           int lp_limit = OracleLimits{}.lp_limit);

} // namespace colorlab

#endif
