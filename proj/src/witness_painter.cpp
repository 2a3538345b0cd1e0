#include "colorlab/witness_painter.hpp"

#include <algorithm>
#include <cmath>

#include "colorlab/rational.hpp"

namespace colorlab {

WitnessPainter::WitnessPainter(int n, int t, bool validate)
    : n_(n), t_(t), validate_(validate) {
    if (n < 1) throw PreconditionError("witness painter: n must be >= 1");
    if (t < 1) throw PreconditionError("witness painter: t must be >= 1");
    classes_.resize(static_cast<std::size_t>(t));
    witnesses_.resize(static_cast<std::size_t>(t));
}

int WitnessPainter::default_t(int n) {
    if (n < 3) return 1;
    double value = std::floor(4.0 * n * std::log(std::log(n)) / std::log(n));
    return std::max(1, static_cast<int>(value));
}

std::optional<int> WitnessPainter::add_vertex(const VertexSet& neighbors) {
    const int v = static_cast<int>(color_of_.size());
    if (!is_canonical_vertex_set(neighbors, v)) {
        throw PreconditionError("witness painter: bad neighbor list");
    }

    // Branch (1): some L color missing among the neighbors.
    std::vector<char> l_seen(static_cast<std::size_t>(t_), 0);
    for (int u : neighbors) {
        if (color_of_[u] < t_) l_seen[color_of_[u]] = 1;
    }
    int chosen = -1;
    int branch = 0;
    for (int l = 0; l < t_; ++l) {
        if (!l_seen[l]) {
            chosen = l;
            branch = 1;
            break;
        }
    }

    VertexSet new_witness;
    int touched_class = -1;
    if (branch == 0) {
        // Branch (2): smallest class j whose witness set is hit densely:
        // |neighbors in N_j| >= (t/2n) |N_j|, i.e. 2n * hits >= t * |N_j|.
        for (int j = 0; j < t_ && branch == 0; ++j) {
            if (classes_[j].empty()) continue;
            const VertexSet& witness = witnesses_[j];
            VertexSet hits;
            std::set_intersection(neighbors.begin(), neighbors.end(), witness.begin(),
                                  witness.end(), std::back_inserter(hits));
            if (2LL * n_ * static_cast<long long>(hits.size()) >=
                static_cast<long long>(t_) * static_cast<long long>(witness.size())) {
                chosen = t_ + j;
                branch = 2;
                touched_class = j;
                new_witness = std::move(hits);
            }
        }
    }
    if (branch == 0) {
        // Branch (3): open the smallest unused class; its witness set is the
        // L-colored neighbors lying outside every current witness set.
        for (int j = 0; j < t_; ++j) {
            if (classes_[j].empty()) {
                chosen = t_ + j;
                branch = 3;
                touched_class = j;
                break;
            }
        }
        if (branch == 0) {
            stuck_ = true;
            return std::nullopt;
        }
        for (int u : neighbors) {
            if (color_of_[u] < t_ && witness_owner_[u] < 0) new_witness.push_back(u);
        }
    }

    color_of_.push_back(chosen);
    branch_taken_.push_back(branch);
    adjacency_.push_back(neighbors);
    witness_owner_.push_back(-1);
    for (int u : neighbors) {
        adjacency_[u].insert(std::lower_bound(adjacency_[u].begin(), adjacency_[u].end(), v), v);
    }
    if (branch != 1) {
        int j = touched_class;
        if (branch == 2) {
            for (int u : witnesses_[j]) witness_owner_[u] = -1;
        }
        witnesses_[j] = std::move(new_witness);
        for (int u : witnesses_[j]) witness_owner_[u] = j;
        classes_[j].push_back(v);
    }
    if (validate_) check_invariants();
    return chosen;
}

std::optional<int> WitnessPainter::choose_color(const PainterView& view) {
    VertexSet neighbors;
    for (int u : view.revealed.neighbors(view.vertex)) {
        if (u < view.vertex) neighbors.push_back(u);
    }
    std::optional<int> color = add_vertex(neighbors);
    if (!color) {
        throw ProtocolError("witness painter stuck at round " + std::to_string(view.vertex) +
                            " (t = " + std::to_string(t_) + " is too small for this stream)");
    }
    return color;
}

void WitnessPainter::check_invariants() const {
    std::vector<int> seen_in(witness_owner_.size(), -1);
    for (int j = 0; j < t_; ++j) {
        for (int u : witnesses_[j]) {
            if (color_of_[u] >= t_) {
                throw VerifyError("witness painter: N_" + std::to_string(j) +
                                  " contains a non-L vertex");
            }
            if (seen_in[u] != -1) {
                throw VerifyError("witness painter: witness sets overlap at vertex " +
                                  std::to_string(u));
            }
            seen_in[u] = j;
            for (int w : classes_[j]) {
                const VertexSet& adj = adjacency_[u];
                if (!std::binary_search(adj.begin(), adj.end(), w)) {
                    throw VerifyError("witness painter: N_" + std::to_string(j) +
                                      " member not adjacent to all of C_" + std::to_string(j));
                }
            }
        }
        if (!classes_[j].empty()) {
            // |N_j| >= (t/2n)^{|C_j|-1} * t/2, checked exactly.
            Rational lhs(static_cast<long long>(witnesses_[j].size()));
            Rational rhs = rat_pow(Rational(t_, 2LL * n_),
                                   static_cast<int>(classes_[j].size()) - 1) *
                           Rational(t_, 2);
            if (lhs < rhs) {
                throw VerifyError("witness painter: witness set N_" + std::to_string(j) +
                                  " too small (" + std::to_string(witnesses_[j].size()) + " < " +
                                  rat_to_string(rhs) + ")");
            }
        }
    }
}

} // namespace colorlab
