#ifndef COLORLAB_ORACLES_HPP
#define COLORLAB_ORACLES_HPP

#include <map>
#include <vector>

#include "colorlab/graph.hpp"
#include "colorlab/rational.hpp"

namespace colorlab {

// Size limits for the exact oracles. Defaults can be overridden through the
// environment (COLORLAB_MIS_LIMIT, COLORLAB_CHI_LIMIT, COLORLAB_LP_LIMIT) or
// per call.
struct OracleLimits {
    int mis_limit = 28;  // enumerate_maximal_independent_sets
    int chi_limit = 40;  // chromatic_number
    int lp_limit = 25;   // fractional_chromatic

    static OracleLimits from_env();
};

// All maximal independent sets, sorted lexicographically, no duplicates.
std::vector<VertexSet> enumerate_maximal_independent_sets(const Graph& g,
                                                          int limit = OracleLimits{}.mis_limit);

// Exact chromatic number: branch and bound over color classes, clique lower
// bound, greedy (degeneracy order) upper bound.
int chromatic_number(const Graph& g, int limit = OracleLimits{}.chi_limit);

// An independent set of maximum total weight under nonnegative rational
// vertex weights, and that weight. Exhaustive with pruning.
struct MaxWeightResult {
    VertexSet set;
    Rational weight;
};
MaxWeightResult max_weight_independent_set(const Graph& g, const std::vector<Rational>& weights,
                                           int limit = 40);

// Nonnegative vertex weights summing to 1 together with a claimed bound on
// the weight of every independent set. A valid certificate with bound b
// proves chi_f(g) >= 1/b.
struct WeightCertificate {
    std::vector<Rational> weights;
    Rational bound;
};

// True iff the maximum independent-set weight is <= cert.bound (checked
// exactly). Throws PreconditionError unless the weights sum to 1.
bool verify_weight_certificate(const Graph& g, const WeightCertificate& cert, int limit = 40);

} // namespace colorlab

#endif
