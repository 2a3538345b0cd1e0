#ifndef COLORLAB_SIMPLEX_HPP
#define COLORLAB_SIMPLEX_HPP

#include <vector>

#include "colorlab/graph.hpp"
#include "colorlab/rational.hpp"

namespace colorlab {

// Exact two-phase primal simplex with Bland's rule (guaranteed termination).
// Solves  min c^T x  subject to  A x >= b,  x >= 0,  with b >= 0.
// `duals` holds one multiplier per constraint row; at optimality they form a
// feasible solution of the dual  max b^T y, A^T y <= c, y >= 0  with equal
// objective.
struct SimplexResult {
    Rational objective;
    std::vector<Rational> primal;
    std::vector<Rational> duals;
};

SimplexResult solve_min_geq(const std::vector<std::vector<Rational>>& A,
                            const std::vector<Rational>& b, const std::vector<Rational>& c);

// Fractional covering: min sum x_j subject to "every row covered at least
// once", where column j covers the rows listed in columns[j].
struct CoveringLpResult {
    Rational value;
    std::vector<Rational> x;      // per column
    std::vector<Rational> duals;  // per row
};

CoveringLpResult solve_covering_lp(int n_rows, const std::vector<VertexSet>& columns);

} // namespace colorlab

#endif
