#include "colorlab/peel.hpp"

#include <algorithm>
#include <cmath>

#include "colorlab/rng.hpp"
#include "colorlab/sampler.hpp"

namespace colorlab {

namespace {

struct LevelSettings {
    int rounds;
    double alpha;
    double beta;  // effective, for the tau diagnostic
};

LevelSettings level_settings(const PeelParams& params, double d, std::optional<double> f, int n) {
    LevelSettings s{};
    const double root = f ? std::sqrt(*f) : d;
    if (params.mode == PeelMode::paper) {
        const double log_n = std::log(std::max(2, n));
        double min_term = std::log(d / log_n);
        if (f) min_term = std::min(std::log(*f), min_term);
        if (!(min_term > 0)) {
            throw PreconditionError("peel_color: paper-mode parameters give a nonpositive "
                                    "log term; instance outside the theorem hypothesis");
        }
        s.rounds = std::max(1, static_cast<int>(std::ceil(params.C * d / (3.0 * min_term))));
        s.beta = 0.1 * min_term;
        s.alpha = s.beta / root;
    } else {
        s.rounds = params.rounds;
        if (params.alpha) {
            s.alpha = *params.alpha;
            s.beta = s.alpha * root;
        } else if (params.beta) {
            s.beta = *params.beta;
            s.alpha = s.beta / root;
        } else {
            s.alpha = 1.0;  // desk default, deliberately out of the guarantee regime
            s.beta = s.alpha * root;
        }
    }
    if (s.rounds < 1) throw PreconditionError("peel_color: rounds must be >= 1");
    if (!(s.alpha > 0)) throw PreconditionError("peel_color: alpha must be positive");
    return s;
}

// Ordered residual over original ids: induced ordered graph plus the map from
// its dense ids back to the original ones.
struct Residual {
    OrderedGraph og;
    VertexSet ids;  // ids[i] = original id of induced vertex i
};

Residual make_residual(const OrderedGraph& full, const VertexSet& alive, double d,
                       std::optional<double> f) {
    Graph sub = full.graph().induced_subgraph(alive);
    std::vector<int> order(alive.size());
    for (std::size_t i = 0; i < alive.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return full.position_of(alive[a]) < full.position_of(alive[b]);
    });
    return Residual{OrderedGraph(std::move(sub), std::move(order), d, f), alive};
}

int max_left_degree_within(const OrderedGraph& full, const std::vector<bool>& alive) {
    int best = 0;
    for (int v = 0; v < full.vertex_count(); ++v) {
        if (!alive[v]) continue;
        int count = 0;
        for (int u : full.graph().neighbors(v)) {
            if (alive[u] && full.position_of(u) < full.position_of(v)) ++count;
        }
        best = std::max(best, count);
    }
    return best;
}

} // namespace

PeelResult peel_color(const OrderedGraph& og, const PeelParams& params) {
    const int n = og.vertex_count();
    if (params.mode == PeelMode::paper) {
        if (std::log2(std::max(1, n)) > params.c * og.d()) {
            throw PreconditionError("peel_color: paper mode requires n <= 2^{c*d}");
        }
    }

    std::vector<int> color(static_cast<std::size_t>(n), -1);
    int next_color = 0;
    PeelTrace trace;

    VertexSet alive(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) alive[v] = v;
    double d_level = og.d();
    std::optional<double> f_level = og.f();
    std::uint64_t attempt_counter = 0;

    while (!alive.empty() && d_level > params.bottom_d) {
        if (f_level && *f_level <= 2.0) f_level.reset();
        LevelSettings settings =
            level_settings(params, d_level, f_level, static_cast<int>(alive.size()));

        PeelLevelTrace level;
        level.d = d_level;
        level.f = f_level;
        level.alpha = settings.alpha;
        level.tau = 4.0 * settings.beta * std::exp(2.0 * settings.beta);
        level.rounds_planned = settings.rounds;

        bool phase_ok = false;
        std::vector<VertexSet> classes;  // original ids, per round
        VertexSet survivors;
        for (int attempt = 0; attempt <= params.restart_budget && !phase_ok; ++attempt) {
            classes.clear();
            level.rounds.clear();
            std::uint64_t phase_seed = derive_seed(params.seed, Stream::restart, attempt_counter++);
            std::vector<bool> is_alive(static_cast<std::size_t>(n), false);
            for (int v : alive) is_alive[v] = true;
            VertexSet current = alive;
            for (int round = 0; round < settings.rounds; ++round) {
                Residual residual = make_residual(og, current, d_level, f_level);
                std::uint64_t round_seed =
                    derive_seed(phase_seed, Stream::trial, static_cast<std::uint64_t>(round));
                VertexSet local;
                if (f_level) {
                    local = sample_sparse(residual.og, settings.alpha, round_seed);
                } else {
                    SamplerParams sp;
                    sp.alpha = settings.alpha;
                    sp.d = d_level;
                    sp.seed = round_seed;
                    local = sample_capped(residual.og, sp);
                }
                VertexSet cls;
                cls.reserve(local.size());
                for (int v : local) cls.push_back(residual.ids[v]);
                std::sort(cls.begin(), cls.end());
                if (!is_independent(og.graph(), cls)) {
                    throw VerifyError("peel_color: sampled class is not independent");
                }
                for (int v : cls) is_alive[v] = false;
                VertexSet next;
                next.reserve(current.size() - cls.size());
                for (int v : current) {
                    if (is_alive[v]) next.push_back(v);
                }
                current = std::move(next);

                PeelRoundTrace rt;
                rt.class_size = static_cast<int>(cls.size());
                rt.residual_size = static_cast<int>(current.size());
                rt.max_residual_left_degree = max_left_degree_within(og, is_alive);
                for (int v : current) {
                    int in_class = 0;
                    for (int u : og.graph().neighbors(v)) {
                        if (og.position_of(u) < og.position_of(v) &&
                            std::binary_search(cls.begin(), cls.end(), u)) {
                            ++in_class;
                        }
                    }
                    rt.max_class_in_left = std::max(rt.max_class_in_left, in_class);
                }
                level.rounds.push_back(rt);
                classes.push_back(std::move(cls));
            }
            if (max_left_degree_within(og, is_alive) <= d_level / 2.0) {
                phase_ok = true;
                survivors = std::move(current);
            } else {
                ++level.restarts;
                ++trace.total_restarts;
            }
        }
        if (!phase_ok) {
            trace.levels.push_back(std::move(level));
            throw PeelRestartError("peel_color: restart budget exhausted at d = " +
                                       std::to_string(d_level),
                                   trace);
        }
        for (const VertexSet& cls : classes) {
            if (cls.empty()) continue;
            for (int v : cls) color[v] = next_color;
            ++next_color;
            ++level.nonempty_classes;
        }
        trace.total_nonempty_classes += level.nonempty_classes;
        trace.levels.push_back(std::move(level));
        alive = std::move(survivors);
        d_level /= 2.0;
        if (f_level) {
            *f_level /= 4.0;
            if (*f_level <= 2.0) f_level.reset();
        }
        if (params.mode == PeelMode::paper &&
            std::log2(std::max(1, n)) > params.c * d_level) {
            break;  // the proof's second case: finish with the simple greedy bound
        }
        if (params.greedy_if_n_exceeds && n > *params.greedy_if_n_exceeds) break;
    }

    // Greedy tail: first-fit along the inherited order with fresh colors.
    trace.greedy_d = d_level;
    if (!alive.empty()) {
        std::vector<bool> is_alive(static_cast<std::size_t>(n), false);
        for (int v : alive) is_alive[v] = true;
        VertexSet by_position = alive;
        std::sort(by_position.begin(), by_position.end(),
                  [&](int a, int b) { return og.position_of(a) < og.position_of(b); });
        int greedy_used = 0;
        std::vector<char> taken;
        for (int v : by_position) {
            taken.assign(static_cast<std::size_t>(greedy_used) + 1, 0);
            for (int u : og.graph().neighbors(v)) {
                if (is_alive[u] && color[u] >= next_color) taken[color[u] - next_color] = 1;
            }
            int c = 0;
            while (taken[c]) ++c;
            color[v] = next_color + c;
            greedy_used = std::max(greedy_used, c + 1);
        }
        trace.greedy_colors = greedy_used;
        next_color += greedy_used;
    }

    PeelResult result;
    result.coloring.color = std::move(color);
    result.coloring.num_colors = next_color;
    trace.num_colors = next_color;
    result.trace = std::move(trace);
    if (!is_proper_coloring(og.graph(), result.coloring.color)) {
        throw VerifyError("peel_color: produced coloring is not proper");
    }
    return result;
}

ResidualCheck residual_degeneracy_check(const OrderedGraph& og,
                                        const std::vector<VertexSet>& removed, double threshold) {
    const int n = og.vertex_count();
    std::vector<bool> gone(static_cast<std::size_t>(n), false);
    for (const VertexSet& s : removed) {
        for (int v : s) {
            if (v < 0 || v >= n) throw PreconditionError("residual_degeneracy_check: bad vertex");
            if (gone[v]) {
                throw PreconditionError("residual_degeneracy_check: removed sets overlap at " +
                                        std::to_string(v));
            }
            gone[v] = true;
        }
    }
    ResidualCheck check;
    check.residual_left_degree.assign(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        if (gone[v]) continue;
        int count = 0;
        for (int u : og.graph().neighbors(v)) {
            if (!gone[u] && og.position_of(u) < og.position_of(v)) ++count;
        }
        check.residual_left_degree[v] = count;
        check.max_left_degree = std::max(check.max_left_degree, count);
        if (static_cast<double>(count) > threshold) check.ok = false;
    }
    return check;
}

} // namespace colorlab
