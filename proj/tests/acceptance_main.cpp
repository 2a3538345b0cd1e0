// Acceptance suite: one check per headline property, each printing a PASS or
// FAIL line. Exit status is nonzero if anything fails. Randomized checks run
// on fixed seeds so the suite is deterministic.

#include <atomic>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <thread>

#include "colorlab/builder_force.hpp"
#include "colorlab/constructions.hpp"
#include "colorlab/io.hpp"
#include "colorlab/peel.hpp"
#include "colorlab/random_graphs.hpp"
#include "colorlab/report.hpp"
#include "colorlab/recursive_painter.hpp"
#include "colorlab/rng.hpp"
#include "colorlab/sampler.hpp"
#include "colorlab/stats.hpp"
#include "colorlab/witness_painter.hpp"
#include "colorlab/zoo.hpp"
#include "support/brute.hpp"
#include "support/process_oracle.hpp"

using namespace colorlab;

namespace {

int failures = 0;
int checks = 0;

void report(int criterion, const std::string& name, bool ok, const std::string& detail = "") {
    ++checks;
    if (!ok) ++failures;
    std::printf("%s criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
}

int hardware_jobs() {
    unsigned n = std::thread::hardware_concurrency();
    return static_cast<int>(std::min(8u, std::max(1u, n)));
}

// ---------------------------------------------------------------- criterion 1

void criterion_1() {
    struct Instance {
        OrderedGraph og;
        double d;
    };
    std::vector<Instance> instances;
    instances.push_back({degeneracy_order(zoo::cycle(5)).ordered, 2.0});
    instances.push_back({degeneracy_order(zoo::petersen()).ordered, 3.0});
    SplitMix rng(20260810);
    for (int i = 0; i < 20; ++i) {
        int d = 2 + static_cast<int>(rng.next_below(3));  // 2..4
        int n = 20 + static_cast<int>(rng.next_below(31));  // 20..50
        instances.push_back({random_triangle_free_left_bounded(n, d, rng.next()),
                             static_cast<double>(d)});
    }
    const std::int64_t trials = 100000;
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < instances.size() && ok; ++i) {
        const auto& inst = instances[i];
        double alpha = 0.8 * std::log(inst.d) / (4.0 * inst.d);
        SamplerParams params{alpha, inst.d, true, 0xC0FFEE + i};
        MarginalReport m = estimate_marginals(inst.og, params, trials, 0.99, hardware_jobs());
        if (!m.flags.in_guarantee_regime()) {
            ok = false;
            detail = "instance " + std::to_string(i) + " not in guarantee regime";
            break;
        }
        for (int v = 0; v < inst.og.vertex_count(); ++v) {
            if (m.lower[v] < m.threshold) {
                ok = false;
                detail = "instance " + std::to_string(i) + " vertex " + std::to_string(v) +
                         ": lower bound " + std::to_string(m.lower[v]) + " < alpha/4 = " +
                         std::to_string(m.threshold);
                break;
            }
        }
    }
    report(1, "sampler marginal lower bounds (alpha/4 at 99% confidence)", ok, detail);
}

// ---------------------------------------------------------------- criterion 2

void criterion_2() {
    testing::TriangleFreeEnumerator enumerator;
    std::vector<Graph> all;
    for (int n = 1; n <= 8; ++n) {
        for (Graph& g : enumerator.connected(n)) all.push_back(std::move(g));
    }
    // Known counts for connected triangle-free graphs on 1..8 vertices.
    bool census_ok = all.size() == 1 + 1 + 1 + 3 + 6 + 19 + 59 + 267;

    const std::int64_t trials = 100000;
    std::atomic<int> bad{0};
    std::atomic<long long> worst_vertex{-1};
    auto run_graph = [&](const Graph& g, std::uint64_t seed) {
        auto [og, degeneracy] = degeneracy_order(g);
        double d = std::max(2, degeneracy);
        OrderedGraph ordered(og.graph(), og.order(), d);
        double alpha = 0.8 * std::log(d) / (4.0 * d);
        auto oracle = testing::enumerate_process(ordered, alpha, d);
        // (a) analytically and (b) via branch inclusion probabilities.
        const double cap = alpha * std::exp(2 * alpha * d);
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (static_cast<double>(oracle.marginal[v]) < alpha / 4.0) ++bad;
        }
        if (static_cast<double>(oracle.max_coin_weight) > cap * (1 + 1e-12)) ++bad;
        for (const auto& by_prefix : oracle.prefix_mass) {
            for (const auto& [prefix, mass] : by_prefix) {
                if (mass.first > 0 &&
                    static_cast<double>(mass.second / mass.first) > cap + 1e-12) {
                    ++bad;
                }
            }
        }
        // Monte Carlo within 4 sigma of the enumerated marginals.
        SamplerParams params{alpha, d, true, seed};
        std::vector<std::int64_t> hits(static_cast<std::size_t>(g.vertex_count()), 0);
        SamplerParams trial = params;
        for (std::int64_t t = 0; t < trials; ++t) {
            trial.seed = derive_seed(params.seed, Stream::trial, static_cast<std::uint64_t>(t));
            for (int v : sample_capped(ordered, trial)) ++hits[v];
        }
        for (int v = 0; v < g.vertex_count(); ++v) {
            double p = static_cast<double>(oracle.marginal[v]);
            double freq = static_cast<double>(hits[v]) / static_cast<double>(trials);
            double sigma = std::sqrt(std::max(p * (1 - p), 1e-12) / trials);
            if (std::abs(freq - p) > 4 * sigma) {
                ++bad;
                worst_vertex = v;
            }
        }
    };
    // Parallel over graphs.
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < hardware_jobs(); ++w) {
        pool.emplace_back([&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= all.size()) return;
                run_graph(all[i], 0xACE0 + i);
            }
        });
    }
    for (auto& t : pool) t.join();
    bool ok = census_ok && bad.load() == 0;
    std::string detail = "graphs: " + std::to_string(all.size()) +
                         ", violations: " + std::to_string(bad.load());
    report(2, "exhaustive process oracle vs Monte Carlo on all connected "
              "triangle-free graphs (n <= 8)",
           ok, detail);
}

// ---------------------------------------------------------------- criterion 3

void criterion_3() {
    SplitMix rng(333);
    int mismatches = 0;
    for (int trial = 0; trial < 100; ++trial) {
        int n = 8 + static_cast<int>(rng.next_below(17));
        int d = 2 + static_cast<int>(rng.next_below(3));
        OrderedGraph og = random_triangle_free_left_bounded(n, d, rng.next());
        int cut = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        SamplerParams params{0.8 * std::log(std::max(2.0, static_cast<double>(d))) / (4 * d),
                             static_cast<double>(d), true, rng.next()};
        VertexSet full = sample_capped(og, params);
        VertexSet prefix_vertices;
        for (int i = 0; i < cut; ++i) prefix_vertices.push_back(og.vertex_at(i));
        std::sort(prefix_vertices.begin(), prefix_vertices.end());
        VertexSet small = sample_capped(og.prefix(cut), params);
        VertexSet mapped;
        for (int v : small) mapped.push_back(prefix_vertices[v]);
        std::sort(mapped.begin(), mapped.end());
        VertexSet expected;
        for (int v : full) {
            if (og.position_of(v) < cut) expected.push_back(v);
        }
        if (mapped != expected) ++mismatches;
    }
    report(3, "prefix locality: I restricted to a prefix equals I of the prefix",
           mismatches == 0, "mismatches: " + std::to_string(mismatches));
}

// ---------------------------------------------------------------- criterion 4

void criterion_4() {
    SplitMix rng(444);
    int violations = 0;
    for (int trial = 0; trial < 50; ++trial) {
        int n = 30 + static_cast<int>(rng.next_below(71));
        int d = 4 + static_cast<int>(rng.next_below(5));
        OrderedGraph og = random_left_bounded_with_f(n, d, 0.5 + 0.4 * rng.next_u01(), rng.next());
        SubsampleResult sub = subsample_sparse(og, rng.next());
        if (contains_clique(sub.graph.graph(), 3)) ++violations;
        if (static_cast<double>(sub.graph.max_left_degree()) > std::sqrt(*og.f())) ++violations;
    }
    report(4, "subsampler output is triangle-free with left-degree <= sqrt(f)",
           violations == 0, "violations: " + std::to_string(violations));
}

// ---------------------------------------------------------------- criterion 5

void criterion_5() {
    // Pinned desk parameters and restart baseline; see the calibration note
    // in the README. Baseline: calibration over this grid observed 0 restarts
    // total; the regression threshold allows a small margin.
    const int kRestartBaseline = 5;
    SplitMix rng(555);
    bool ok = true;
    std::string detail;
    int total_restarts = 0;
    struct Case {
        int d;
        int n;
    };
    std::vector<Case> grid = {{8, 512}, {8, 1024}, {8, 4096}, {16, 1024}, {16, 4096}};
    for (const Case& c : grid) {
        OrderedGraph og = random_triangle_free_left_bounded(c.n, c.d, rng.next());
        PeelParams params;
        params.seed = rng.next();
        PeelResult result;
        try {
            result = peel_color(og, params);
        } catch (const PeelRestartError&) {
            ok = false;
            detail = "restart budget exhausted at d=" + std::to_string(c.d);
            break;
        }
        total_restarts += result.trace.total_restarts;
        if (!is_proper_coloring(og.graph(), result.coloring.color)) {
            ok = false;
            detail = "improper coloring";
            break;
        }
        if (result.coloring.num_colors > c.d + 1) {
            ok = false;
            detail = "used " + std::to_string(result.coloring.num_colors) + " > d+1 colors";
            break;
        }
        if (result.coloring.num_colors !=
            result.trace.total_nonempty_classes + result.trace.greedy_colors) {
            ok = false;
            detail = "ledger identity violated";
            break;
        }
        int planned = 0;
        for (const auto& level : result.trace.levels) planned += level.rounds_planned;
        if (result.coloring.num_colors > planned + static_cast<int>(result.trace.greedy_d) + 1) {
            ok = false;
            detail = "color count exceeds rounds + greedy bound";
            break;
        }
    }
    if (ok && total_restarts > kRestartBaseline) {
        ok = false;
        detail = "restart regression: " + std::to_string(total_restarts) + " > baseline " +
                 std::to_string(kRestartBaseline);
    }
    if (ok) detail = "total restarts: " + std::to_string(total_restarts);
    report(5, "peel coloring: proper, <= d+1 colors, exact ledger, restart baseline", ok, detail);
}

// ---------------------------------------------------------------- criterion 6

void criterion_6() {
    // Pinned grid from calibration: t and density pairs on n = 500 streams
    // where branches (2) and (3) both fire and the painter never gets stuck.
    struct Cell {
        int t;
        double density;
    };
    std::vector<Cell> grid = {{8, 0.15}, {8, 0.3}, {12, 0.3}, {12, 0.5}, {16, 0.5}};
    const int streams_per_cell = 200;  // 1000 total
    const int n = 500;
    std::atomic<int> stuck{0}, invariant_failures{0}, missing_witness{0};
    std::atomic<long long> branch2{0}, branch3{0};

    auto run_stream = [&](const Cell& cell, std::uint64_t seed) {
        WitnessPainter painter(n, cell.t, /*validate=*/true);  // checks after every step
        SplitMix rng(seed);
        std::vector<std::pair<int, int>> edges;
        bool completed = true;
        for (int v = 0; v < n; ++v) {
            VertexSet neighbors;
            for (int u = 0; u < v; ++u) {
                if (rng.next_u01() < cell.density) neighbors.push_back(u);
            }
            std::optional<int> color;
            try {
                color = painter.add_vertex(neighbors);
            } catch (const VerifyError&) {
                ++invariant_failures;
                completed = false;
                break;
            }
            if (!color) {
                ++stuck;
                completed = false;
                break;
            }
            for (int u : neighbors) edges.emplace_back(u, v);
        }
        if (!completed) return;
        for (int b : painter.branch_taken()) {
            if (b == 2) ++branch2;
            if (b == 3) ++branch3;
        }
        Graph revealed(n, edges);
        for (int j = 0; j < painter.t(); ++j) {
            const VertexSet& members = painter.class_members(j);
            if (members.empty()) continue;
            if (painter.witness_set(j).empty() || !common_neighbor(revealed, members)) {
                ++missing_witness;
                continue;
            }
            for (int u : painter.witness_set(j)) {
                for (int w : members) {
                    if (!revealed.has_edge(u, w)) ++missing_witness;
                }
            }
        }
    };

    std::atomic<int> next{0};
    const int total = static_cast<int>(grid.size()) * streams_per_cell;
    std::vector<std::thread> pool;
    for (int w = 0; w < hardware_jobs(); ++w) {
        pool.emplace_back([&] {
            while (true) {
                int i = next.fetch_add(1);
                if (i >= total) return;
                const Cell& cell = grid[static_cast<std::size_t>(i) / streams_per_cell];
                run_stream(cell, 0xBEE5 + static_cast<std::uint64_t>(i));
            }
        });
    }
    for (auto& t : pool) t.join();

    bool branches_fired = branch2.load() > 0 && branch3.load() > 0;
    bool ok = stuck.load() == 0 && invariant_failures.load() == 0 &&
              missing_witness.load() == 0 && branches_fired;
    std::string detail = "stuck: " + std::to_string(stuck.load()) +
                         ", invariant failures: " + std::to_string(invariant_failures.load()) +
                         ", witness failures: " + std::to_string(missing_witness.load()) +
                         ", branch2/3 firings: " + std::to_string(branch2.load()) + "/" +
                         std::to_string(branch3.load());
    report(6, "witness painter invariants and common neighbors on 1000 streams", ok, detail);
}

// ---------------------------------------------------------------- criterion 7

void criterion_7() {
    bool ok = true;
    std::string detail;
    for (int r : {2, 3, 4}) {
        for (int y : {2, 4, 8}) {
            long long rounds_bound = 1;
            for (int i = 0; i < r - 1; ++i) rounds_bound *= y;
            int n = static_cast<int>(rounds_bound);
            for (int painter_kind = 0; painter_kind < 3 && ok; ++painter_kind) {
                std::unique_ptr<PainterStrategy> painter;
                switch (painter_kind) {
                    case 0: painter = std::make_unique<FirstFitPainter>(); break;
                    case 1:
                        painter = std::make_unique<RandomLegalPainter>(
                            static_cast<std::uint64_t>(r * 100 + y));
                        break;
                    default:
                        painter = std::make_unique<WitnessPainter>(n, std::max(2, n / 4));
                        break;
                }
                ForceIndependentBuilder builder(r, y);
                GameTranscript t = play(builder, *painter, n, r, 2 * n + 4, 7, "force", "p");
                // The referee enforces K_r-freeness at every prefix; reaching
                // any outcome other than referee_rejected certifies it.
                if (t.outcome.type == GameOutcomeType::referee_rejected) {
                    ok = false;
                    detail = "builder violated K_r at r=" + std::to_string(r);
                    break;
                }
                if (!builder.construction_done()) {
                    ok = false;
                    detail = "construction incomplete at r=" + std::to_string(r) +
                             " y=" + std::to_string(y);
                    break;
                }
                const VertexSet& set = builder.independent_set();
                if (!is_independent(t.final_graph, set)) {
                    ok = false;
                    detail = "I not independent";
                    break;
                }
                std::map<int, int> multiplicity;
                for (int v : set) ++multiplicity[t.colors[v]];
                for (auto [color, count] : multiplicity) {
                    if (count > y) {
                        ok = false;
                        detail = "color used more than y times in I";
                    }
                }
                Rational size_bound = force_constant(r) * rat_pow(Rational(y), r - 1);
                if (Rational(static_cast<long long>(set.size())) < size_bound) {
                    ok = false;
                    detail = "|I| below c_r y^{r-1} at r=" + std::to_string(r) +
                             " y=" + std::to_string(y);
                }
                if (builder.rounds_used() > rounds_bound) {
                    ok = false;
                    detail = "rounds exceeded y^{r-1}";
                }
                if (r >= 2 && contains_clique(t.final_graph, r)) {
                    ok = false;
                    detail = "final graph contains K_r";
                }
            }
        }
    }
    report(7, "builder lemma postconditions for r in {2,3,4}, y in {2,4,8}", ok, detail);
}

// ---------------------------------------------------------------- criterion 8

void criterion_8() {
    BuilderFactory factory = [] {
        return std::make_unique<ForceIndependentBuilder>(3, 2, true);
    };
    StrategyTreeResult tree = strategy_tree_graph(factory, 2, 3, 4);
    bool triangle_free = !contains_clique(tree.graph, 3);
    bool degenerate = true;
    try {
        tree.by_length_order();
    } catch (const GraphError&) {
        degenerate = false;
    }
    bool size_ok = tree.graph.vertex_count() <= 15;
    bool closed = tree.open_leaves == 0;
    int chi = chromatic_number(tree.graph);
    bool ok = triangle_free && degenerate && size_ok && closed && chi == 3;
    report(8, "strategy tree at d=2, r=3, N=4: triangle-free, 2-degenerate, chi = 3", ok,
           "vertices: " + std::to_string(tree.graph.vertex_count()) +
               ", chi: " + std::to_string(chi));
}

// ---------------------------------------------------------------- criterion 9

void criterion_9() {
    bool ok = true;
    std::string detail;
    for (int gamma_kind = 1; gamma_kind <= 2 && ok; ++gamma_kind) {
        Graph gamma = zoo::complete(gamma_kind);
        int x = degeneracy_order(gamma).degeneracy;
        int omega = max_clique(gamma);
        for (int d : {2, 3}) {
            for (int level = 1; level <= 3; ++level) {
                unsigned long long predicted;
                try {
                    predicted = zykov_predicted_size(gamma.vertex_count(), d, level, 1000000);
                } catch (const SizeLimitError&) {
                    continue;
                }
                ZykovLikeResult result = zykov_like(gamma, d, level);
                if (static_cast<unsigned long long>(result.graph.vertex_count()) != predicted) {
                    ok = false;
                    detail = "size recurrence mismatch";
                }
                if (degeneracy_order(result.graph).degeneracy > d + x) {
                    ok = false;
                    detail = "degeneracy above d + degeneracy(gamma)";
                }
                if (contains_clique(result.graph, omega + 2)) {
                    ok = false;
                    detail = "clique bound violated";
                }
            }
        }
    }
    if (ok) {
        std::vector<unsigned long long> sizes;
        for (int level = 1; level <= 4; ++level) {
            sizes.push_back(zykov_predicted_size(1, 2, level));
        }
        if (sizes != std::vector<unsigned long long>{1, 3, 15, 255}) {
            ok = false;
            detail = "size sequence for K_1, d=2 is not 1, 3, 15, 255";
        }
        ZykovLikeResult big = zykov_like(zoo::complete(1), 2, 4);
        if (big.graph.vertex_count() != 255) {
            ok = false;
            detail = "built level-4 size differs from 255";
        }
    }
    report(9, "blow-up construction: degeneracy and clique bounds, exact size recurrence", ok,
           detail);
}

// --------------------------------------------------------------- criterion 10

void criterion_10() {
    bool ok = true;
    std::string detail;
    for (int level : {1, 2}) {
        FractionalRecursionReport r = check_fractional_recursion(zoo::complete(1), 2, level);
        if (!r.inequality_holds || !r.certificate_valid || !r.monotone) {
            ok = false;
            detail = "level " + std::to_string(level) + " failed";
        }
    }
    if (fractional_chromatic(zoo::cycle(5)).value != Rational(5, 2)) {
        ok = false;
        detail = "chi_f(C_5) != 5/2";
    }
    for (int n = 1; n <= 8; ++n) {
        if (fractional_chromatic(zoo::complete(n)).value != n) {
            ok = false;
            detail = "chi_f(K_" + std::to_string(n) + ") != " + std::to_string(n);
        }
    }
    report(10, "fractional recursion (exact rationals) and proof-built certificates", ok, detail);
}

// --------------------------------------------------------------- criterion 11

void criterion_11() {
    std::vector<Graph> corpus = {zoo::cycle(5),
                                 zoo::cycle(7),
                                 zoo::cycle(9),
                                 zoo::path(6),
                                 zoo::star(6),
                                 zoo::petersen(),
                                 zoo::grotzsch(),
                                 zoo::complete_bipartite(3, 4),
                                 zoo::complete(5),
                                 zoo::complete(8),
                                 zykov_like(zoo::complete(1), 2, 3).graph,
                                 zykov_like(zoo::complete(2), 2, 2).graph};
    SplitMix rng(1111);
    for (int i = 0; i < 6; ++i) corpus.push_back(random_gnp(12, 0.25 + 0.05 * i, rng.next()));
    {
        BuilderFactory factory = [] {
            return std::make_unique<ForceIndependentBuilder>(3, 2, true);
        };
        corpus.push_back(strategy_tree_graph(factory, 2, 3, 4).graph);
    }
    bool ok = true;
    std::string detail;
    int solved = 0;
    for (const Graph& g : corpus) {
        if (g.vertex_count() > OracleLimits{}.lp_limit) continue;
        RationalLPResult lp = fractional_chromatic(g);
        ++solved;
        Rational primal = 0;
        for (const auto& [set, x] : lp.primal) primal += x;
        Rational dual = 0;
        for (const Rational& w : lp.dual) dual += w;
        if (primal != lp.value || dual != lp.value) {
            ok = false;
            detail = "duality gap";
            break;
        }
        if (Rational(max_clique(g)) > lp.value || lp.value > Rational(chromatic_number(g))) {
            ok = false;
            detail = "omega <= chi_f <= chi sandwich violated";
            break;
        }
    }
    report(11, "exact LP duality and the omega <= chi_f <= chi sandwich", ok,
           "graphs solved: " + std::to_string(solved));
}

} // namespace

int main() {
    std::printf("colorlab acceptance suite (%s)\n", version_string().c_str());
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    std::printf("%d/%d criteria passed\n", checks - failures, checks);
    return failures == 0 ? 0 : 1;
}
