#ifndef COLORLAB_PEEL_HPP
#define COLORLAB_PEEL_HPP

#include <cstdint>
#include <optional>

#include "colorlab/graph.hpp"

namespace colorlab {

enum class PeelMode { paper, desk };

// Parameters of the iterative peel coloring.
//
// paper mode derives everything from the constants (C, c): per level,
// rounds = C*d / (3*min{log f, log(d/log n)}), beta = 0.1*min{...},
// alpha = beta/sqrt(f) (beta/d when no f is declared), and requires
// n <= 2^{c*d}. With the default constants that hypothesis only holds for
// astronomically large d, so desk mode (explicit rounds/alpha, no size
// hypothesis) is the default.
struct PeelParams {
    PeelMode mode = PeelMode::desk;
    double C = 1e4;
    double c = 1e-9;
    int rounds = 4;                      // desk mode: rounds per level
    std::optional<double> alpha;         // desk mode: explicit alpha
    std::optional<double> beta;          // fallback: alpha = beta/sqrt(f) or beta/d
    int restart_budget = 50;
    double bottom_d = 4.0;               // greedy tail once d <= bottom_d
    std::optional<double> greedy_if_n_exceeds;  // desk analog of the paper's n > 2^{cd/2} case
    std::uint64_t seed = 0;
};

struct Coloring {
    std::vector<int> color;  // per vertex id, 0-based
    int num_colors = 0;
};

struct PeelRoundTrace {
    int class_size = 0;               // vertices removed this round
    int residual_size = 0;            // vertices left afterwards
    int max_residual_left_degree = 0; // the Y trace: max |N_L(v) ∩ residual|
    int max_class_in_left = 0;        // max |N_L(v) ∩ class| over survivors
};

struct PeelLevelTrace {
    double d = 0;
    std::optional<double> f;
    double alpha = 0;
    double tau = 0;  // diagnostic only: 4*beta*e^{2 beta} for the effective beta
    int rounds_planned = 0;
    int restarts = 0;
    int nonempty_classes = 0;
    std::vector<PeelRoundTrace> rounds;
};

struct PeelTrace {
    std::vector<PeelLevelTrace> levels;
    int greedy_colors = 0;
    double greedy_d = 0;  // d bound at the greedy tail
    int total_restarts = 0;
    int total_nonempty_classes = 0;
    int num_colors = 0;
};

struct PeelResult {
    Coloring coloring;
    PeelTrace trace;
};

// Restart budget exhausted; carries the trace accumulated so far.
class PeelRestartError : public std::runtime_error {
public:
    PeelRestartError(const std::string& what, PeelTrace trace)
        : std::runtime_error(what), trace(std::move(trace)) {}
    PeelTrace trace;
};

// Rounds of independent-set peeling per level, residual left-degree halving
// between levels, greedy tail at the bottom. The returned coloring is checked
// proper and complete before returning.
PeelResult peel_color(const OrderedGraph& og, const PeelParams& params);

// Whether every vertex surviving the removal of `removed` (pairwise disjoint)
// has at most `threshold` surviving left-neighbors under the inherited order.
struct ResidualCheck {
    bool ok = true;
    int max_left_degree = 0;
    std::vector<int> residual_left_degree;  // per vertex id, -1 if removed
};

ResidualCheck residual_degeneracy_check(const OrderedGraph& og,
                                        const std::vector<VertexSet>& removed, double threshold);

} // namespace colorlab

#endif
