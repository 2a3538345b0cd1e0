#include "colorlab/fractional.hpp"

namespace colorlab {

RationalLPResult fractional_chromatic(const Graph& g, int limit) {
    const int n = g.vertex_count();
    if (n > limit) {
        throw SizeLimitError("fractional_chromatic: graph has " + std::to_string(n) +
                             " vertices, limit is " + std::to_string(limit));
    }
    RationalLPResult result;
    if (n == 0) {
        result.value = 0;
        return result;
    }

    // Restricting the primal to maximal independent sets is lossless: mass on
    // any independent set can be moved to a maximal superset without breaking
    // coverage (see the oracle notes in the README).
    std::vector<VertexSet> sets = enumerate_maximal_independent_sets(g, limit);
    CoveringLpResult lp = solve_covering_lp(n, sets);

    result.value = lp.value;
    for (std::size_t j = 0; j < sets.size(); ++j) {
        if (lp.x[j] != 0) result.primal.emplace(sets[j], lp.x[j]);
    }
    result.dual = lp.duals;

    // Primal feasibility and objective.
    Rational primal_total = 0;
    std::vector<Rational> coverage(static_cast<std::size_t>(n), Rational(0));
    for (const auto& [set, x] : result.primal) {
        if (x < 0) throw VerifyError("fractional_chromatic: negative primal weight");
        primal_total += x;
        for (int v : set) coverage[v] += x;
    }
    for (int v = 0; v < n; ++v) {
        if (coverage[v] < 1) throw VerifyError("fractional_chromatic: vertex uncovered");
    }
    if (primal_total != result.value) {
        throw VerifyError("fractional_chromatic: primal objective mismatch");
    }

    // Dual feasibility, checked against an independent exact search rather
    // than the simplex's own constraint rows.
    Rational dual_total = 0;
    for (const Rational& w : result.dual) {
        if (w < 0) throw VerifyError("fractional_chromatic: negative dual weight");
        dual_total += w;
    }
    if (dual_total != result.value) {
        throw VerifyError("fractional_chromatic: dual objective mismatch");
    }
    if (max_weight_independent_set(g, result.dual, limit).weight > 1) {
        throw VerifyError("fractional_chromatic: dual infeasible");
    }
    return result;
}

WeightCertificate certificate_from_dual(const RationalLPResult& result) {
    if (result.value <= 0) throw PreconditionError("certificate_from_dual: value must be positive");
    WeightCertificate cert;
    cert.weights.reserve(result.dual.size());
    for (const Rational& w : result.dual) cert.weights.push_back(w / result.value);
    cert.bound = 1 / result.value;
    return cert;
}

} // namespace colorlab
