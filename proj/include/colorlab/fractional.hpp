#ifndef COLORLAB_FRACTIONAL_HPP
#define COLORLAB_FRACTIONAL_HPP

#include <map>

#include "colorlab/oracles.hpp"
#include "colorlab/simplex.hpp"

namespace colorlab {

// Exact fractional chromatic number with both sides of the LP.
//
// primal: distribution weights x_I over maximal independent sets covering
//         every vertex at least once, sum x_I = value.
// dual:   vertex weights w_v with w(I) <= 1 for every independent set,
//         sum w_v = value.
//
// Results are self-verified before being returned: primal feasibility by
// direct substitution, dual feasibility by an independent exact search for a
// maximum-weight independent set, and equality of the two objectives. By weak
// duality the verified pair pins the value exactly.
struct RationalLPResult {
    Rational value;
    std::map<VertexSet, Rational> primal;
    std::vector<Rational> dual;
};

RationalLPResult fractional_chromatic(const Graph& g, int limit = OracleLimits{}.lp_limit);

// Dual weights scaled by 1/value: a weight certificate proving
// chi_f(g) >= value.
WeightCertificate certificate_from_dual(const RationalLPResult& result);

} // namespace colorlab

#endif
