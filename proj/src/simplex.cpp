#include "colorlab/simplex.hpp"

namespace colorlab {

namespace {

class Tableau {
public:
    // Columns: [structural (m)] [surplus (n)] [artificial (n)].
    Tableau(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
            const std::vector<Rational>& c)
        : n_(static_cast<int>(A.size())), m_(static_cast<int>(c.size())) {
        for (const auto& row : A) {
            if (static_cast<int>(row.size()) != m_) {
                throw PreconditionError("simplex: ragged constraint matrix");
            }
        }
        for (const Rational& bi : b) {
            if (bi < 0) throw PreconditionError("simplex: requires b >= 0");
        }
        total_ = m_ + 2 * n_;
        rows_.assign(static_cast<std::size_t>(n_),
                     std::vector<Rational>(static_cast<std::size_t>(total_), Rational(0)));
        rhs_ = b;
        basis_.resize(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < m_; ++j) rows_[i][j] = A[i][j];
            rows_[i][m_ + i] = -1;           // surplus
            rows_[i][m_ + n_ + i] = 1;       // artificial
            basis_[i] = m_ + n_ + i;
        }
        // Phase-1 reduced costs: cost 1 on artificials, priced out against the
        // all-artificial basis.
        r1_.assign(static_cast<std::size_t>(total_), Rational(0));
        obj1_ = 0;
        for (int j = 0; j < total_; ++j) {
            Rational colsum = 0;
            for (int i = 0; i < n_; ++i) colsum += rows_[i][j];
            r1_[j] = (j >= m_ + n_ ? Rational(1) : Rational(0)) - colsum;
        }
        for (int i = 0; i < n_; ++i) obj1_ += rhs_[i];
        // Phase-2 reduced costs (artificials cost 0, basis cost 0 initially).
        r2_.assign(static_cast<std::size_t>(total_), Rational(0));
        for (int j = 0; j < m_; ++j) r2_[j] = c[j];
        obj2_ = 0;
    }

    // Returns false if the phase-1 optimum is positive (infeasible input).
    bool run() {
        optimize(r1_, obj1_, /*allow_artificial=*/true);
        if (obj1_ != 0) return false;
        optimize(r2_, obj2_, /*allow_artificial=*/false);
        return true;
    }

    SimplexResult extract() const {
        SimplexResult result;
        result.objective = obj2_;
        result.primal.assign(static_cast<std::size_t>(m_), Rational(0));
        for (int i = 0; i < n_; ++i) {
            if (basis_[i] < m_) result.primal[basis_[i]] = rhs_[i];
        }
        // At optimality the reduced cost of surplus column i equals the dual
        // multiplier of row i.
        result.duals.assign(static_cast<std::size_t>(n_), Rational(0));
        for (int i = 0; i < n_; ++i) result.duals[i] = r2_[m_ + i];
        return result;
    }

private:
    void optimize(std::vector<Rational>& r, Rational& obj, bool allow_artificial) {
        while (true) {
            // Bland: entering column = smallest index with negative reduced cost.
            int pcol = -1;
            int scan_limit = allow_artificial ? total_ : m_ + n_;
            for (int j = 0; j < scan_limit; ++j) {
                if (r[j] < 0) {
                    pcol = j;
                    break;
                }
            }
            if (pcol < 0) return;
            // Ratio test; ties broken by smallest basis variable (Bland).
            int prow = -1;
            Rational best_ratio = 0;
            for (int i = 0; i < n_; ++i) {
                if (rows_[i][pcol] <= 0) continue;
                Rational ratio = rhs_[i] / rows_[i][pcol];
                if (prow < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[prow])) {
                    prow = i;
                    best_ratio = ratio;
                }
            }
            if (prow < 0) {
                throw PreconditionError("simplex: unbounded objective");
            }
            pivot(prow, pcol);
        }
    }

    void pivot(int prow, int pcol) {
        auto& prow_data = rows_[prow];
        Rational inv = 1 / prow_data[pcol];
        for (auto& value : prow_data) value *= inv;
        rhs_[prow] *= inv;
        for (int i = 0; i < n_; ++i) {
            if (i == prow) continue;
            Rational factor = rows_[i][pcol];
            if (factor == 0) continue;
            auto& row = rows_[i];
            for (int j = 0; j < total_; ++j) {
                if (prow_data[j] != 0) row[j] -= factor * prow_data[j];
            }
            rhs_[i] -= factor * rhs_[prow];
        }
        eliminate(r1_, obj1_, prow, pcol);
        eliminate(r2_, obj2_, prow, pcol);
        basis_[prow] = pcol;
    }

    // Keeps r = c - c_B^T B^{-1} A and obj = c_B^T B^{-1} b in sync with the
    // pivoted rows. The entering variable comes in at value rhs[prow], so the
    // objective moves by r[pcol] * rhs[prow].
    void eliminate(std::vector<Rational>& r, Rational& obj, int prow, int pcol) {
        Rational factor = r[pcol];
        if (factor == 0) return;
        const auto& prow_data = rows_[prow];
        for (int j = 0; j < total_; ++j) {
            if (prow_data[j] != 0) r[j] -= factor * prow_data[j];
        }
        obj += factor * rhs_[prow];
    }

    int n_, m_, total_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<Rational> rhs_;
    std::vector<Rational> r1_, r2_;
    Rational obj1_, obj2_;
    std::vector<int> basis_;
};

} // namespace

SimplexResult solve_min_geq(const std::vector<std::vector<Rational>>& A,
                            const std::vector<Rational>& b, const std::vector<Rational>& c) {
    if (A.size() != b.size()) throw PreconditionError("simplex: |A| != |b|");
    Tableau tableau(A, b, c);
    if (!tableau.run()) throw PreconditionError("simplex: infeasible system");
    return tableau.extract();
}

CoveringLpResult solve_covering_lp(int n_rows, const std::vector<VertexSet>& columns) {
    const int m = static_cast<int>(columns.size());
    std::vector<std::vector<Rational>> A(static_cast<std::size_t>(n_rows),
                                         std::vector<Rational>(static_cast<std::size_t>(m),
                                                                Rational(0)));
    for (int j = 0; j < m; ++j) {
        for (int row : columns[j]) {
            if (row < 0 || row >= n_rows) throw PreconditionError("covering lp: row out of range");
            A[row][j] = 1;
        }
    }
    std::vector<Rational> b(static_cast<std::size_t>(n_rows), Rational(1));
    std::vector<Rational> c(static_cast<std::size_t>(m), Rational(1));
    SimplexResult solved = solve_min_geq(A, b, c);
    return CoveringLpResult{solved.objective, std::move(solved.primal), std::move(solved.duals)};
}

} // namespace colorlab
