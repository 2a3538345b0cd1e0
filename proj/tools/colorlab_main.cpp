// colorlab: seeded graph-coloring experiments with machine-readable reports.
//
// Verbs: sample, color, game, replay, construct, chif, verify.
// Exit codes: 0 ok, 2 usage, 3 i/o, 4 size limit, 5 verification failed,
// 6 bad parameters, 70 internal error.

#include <CLI11.hpp>
#include <iostream>
#include <random>
#include <set>

#include "colorlab/builder_force.hpp"
#include "colorlab/constructions.hpp"
#include "colorlab/io.hpp"
#include "colorlab/peel.hpp"
#include "colorlab/report.hpp"
#include "colorlab/rng.hpp"
#include "colorlab/zoo.hpp"

namespace {

using namespace colorlab;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitSizeLimit = 4;
constexpr int kExitVerifyFailed = 5;
constexpr int kExitBadParams = 6;
constexpr int kExitInternal = 70;

LabeledGraph load_graph_arg(const std::string& text) {
    if (auto named = zoo::by_name(text)) {
        LabeledGraph g;
        g.graph = std::move(*named);
        for (int v = 0; v < g.graph.vertex_count(); ++v) g.labels.push_back(std::to_string(v));
        return g;
    }
    return load_edge_list_file(text);
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> seed) {
    if (seed) return *seed;
    std::random_device device;
    return (static_cast<std::uint64_t>(device()) << 32) ^ device();
}

void emit_report(const Report& report, const std::string& path) {
    std::string text = report.to_json();
    if (path.empty()) {
        std::cout << text;
    } else {
        write_file(path, text);
    }
}

struct SampleOptions {
    std::string graph;
    std::string ordered_json_path;
    double alpha = 0.05;
    std::optional<double> d;
    std::optional<double> f;
    bool sparse = false;
    bool cap = true;
    std::int64_t trials = 1;
    double confidence = 0.99;
    std::optional<std::uint64_t> seed;
    int jobs = 1;
    std::string csv_path;
    std::string report_path;
};

int run_sample(const SampleOptions& options) {
    std::optional<OrderedGraph> og;
    std::vector<std::string> labels;
    if (!options.ordered_json_path.empty()) {
        LoadedOrderedGraph loaded = ordered_graph_from_json(read_file(options.ordered_json_path));
        og = std::move(loaded.ordered);
        labels = std::move(loaded.labels);
    } else {
        LabeledGraph g = load_graph_arg(options.graph);
        labels = g.labels;
        auto [ordered, degeneracy] = degeneracy_order(g.graph);
        double d = options.d.value_or(std::max(1, degeneracy));
        og = OrderedGraph(ordered.graph(), ordered.order(), d, options.f);
    }
    std::uint64_t seed = resolve_seed(options.seed);

    Report report("sample");
    report.set_config({{"graph", options.graph},
                       {"ordered_json", options.ordered_json_path},
                       {"alpha", options.alpha},
                       {"d", og->d()},
                       {"f", og->f() ? ordered_json(*og->f()) : ordered_json(nullptr)},
                       {"sparse", options.sparse},
                       {"cap", options.cap},
                       {"trials", options.trials},
                       {"confidence", options.confidence},
                       {"seed", seed},
                       {"jobs", options.jobs}});

    if (options.trials <= 1) {
        VertexSet sample;
        if (options.sparse) {
            sample = sample_sparse(*og, options.alpha, seed);
        } else {
            SamplerParams params{options.alpha, og->d(), options.cap, seed};
            sample = sample_capped(*og, params);
        }
        ordered_json set = ordered_json::array();
        for (int v : sample) set.push_back(labels[v]);
        report.add_result("independent_set", set);
        report.stamp("independent", is_independent(og->graph(), sample));
    } else {
        MarginalReport marginals;
        if (options.sparse) {
            marginals = estimate_marginals_sparse(*og, options.alpha, seed, options.trials,
                                                  options.confidence, options.jobs);
        } else {
            SamplerParams params{options.alpha, og->d(), options.cap, seed};
            marginals = estimate_marginals(*og, params, options.trials, options.confidence,
                                           options.jobs);
        }
        report.add_result("marginals", marginal_report_to_json(marginals));
        if (!options.csv_path.empty()) write_file(options.csv_path, marginal_report_to_csv(marginals));
        if (marginals.flags.in_guarantee_regime()) {
            bool ok = std::none_of(marginals.violation.begin(), marginals.violation.end(),
                                   [](bool v) { return v; });
            report.stamp("marginals_above_threshold", ok);
        }
    }
    emit_report(report, options.report_path);
    return report.all_verified() ? kExitOk : kExitVerifyFailed;
}

struct ColorOptions {
    std::string graph;
    std::string mode = "desk";
    int rounds = 4;
    std::optional<double> alpha;
    std::optional<double> beta;
    std::optional<double> d;
    std::optional<double> f;
    double paper_C = 1e4;
    double paper_c = 1e-9;
    int restarts = 50;
    double bottom_d = 4.0;
    std::optional<std::uint64_t> seed;
    std::string out_path;
    std::string trace_path;
    std::string report_path;
};

ordered_json trace_to_json(const PeelTrace& trace) {
    ordered_json levels = ordered_json::array();
    for (const PeelLevelTrace& level : trace.levels) {
        ordered_json rounds = ordered_json::array();
        for (const PeelRoundTrace& round : level.rounds) {
            rounds.push_back({{"class_size", round.class_size},
                              {"residual_size", round.residual_size},
                              {"max_residual_left_degree", round.max_residual_left_degree},
                              {"max_class_in_left", round.max_class_in_left}});
        }
        levels.push_back({{"d", level.d},
                          {"f", level.f ? ordered_json(*level.f) : ordered_json(nullptr)},
                          {"alpha", level.alpha},
                          {"tau_diagnostic", level.tau},
                          {"rounds_planned", level.rounds_planned},
                          {"restarts", level.restarts},
                          {"nonempty_classes", level.nonempty_classes},
                          {"rounds", std::move(rounds)}});
    }
    return {{"levels", std::move(levels)},
            {"greedy_colors", trace.greedy_colors},
            {"greedy_d", trace.greedy_d},
            {"total_restarts", trace.total_restarts},
            {"total_nonempty_classes", trace.total_nonempty_classes},
            {"num_colors", trace.num_colors}};
}

int run_color(const ColorOptions& options) {
    LabeledGraph g = load_graph_arg(options.graph);
    auto [ordered, degeneracy] = degeneracy_order(g.graph);
    double d = options.d.value_or(std::max(1, degeneracy));
    OrderedGraph og(ordered.graph(), ordered.order(), d, options.f);

    PeelParams params;
    params.mode = options.mode == "paper" ? PeelMode::paper : PeelMode::desk;
    params.rounds = options.rounds;
    params.alpha = options.alpha;
    params.beta = options.beta;
    params.C = options.paper_C;
    params.c = options.paper_c;
    params.restart_budget = options.restarts;
    params.bottom_d = options.bottom_d;
    params.seed = resolve_seed(options.seed);

    Report report("color");
    report.set_config({{"graph", options.graph},
                       {"mode", options.mode},
                       {"rounds", params.rounds},
                       {"alpha", params.alpha ? ordered_json(*params.alpha) : ordered_json(nullptr)},
                       {"beta", params.beta ? ordered_json(*params.beta) : ordered_json(nullptr)},
                       {"d", d},
                       {"f", options.f ? ordered_json(*options.f) : ordered_json(nullptr)},
                       {"C", params.C},
                       {"c", params.c},
                       {"restart_budget", params.restart_budget},
                       {"bottom_d", params.bottom_d},
                       {"seed", params.seed}});

    PeelResult result = peel_color(og, params);
    report.add_result("num_colors", result.coloring.num_colors);
    report.add_result("trace", trace_to_json(result.trace));
    report.stamp("proper_coloring", is_proper_coloring(g.graph, result.coloring.color));
    report.stamp("ledger_identity",
                 result.coloring.num_colors ==
                     result.trace.total_nonempty_classes + result.trace.greedy_colors);
    OracleLimits limits = OracleLimits::from_env();
    if (g.graph.vertex_count() <= limits.chi_limit) {
        int chi = chromatic_number(g.graph, limits.chi_limit);
        report.add_result("chromatic_number", chi);
        report.stamp("at_least_chromatic", result.coloring.num_colors >= chi);
    }
    if (!options.out_path.empty()) {
        write_file(options.out_path, coloring_to_csv(result.coloring, &g.labels));
    }
    if (!options.trace_path.empty()) {
        write_file(options.trace_path, trace_to_json(result.trace).dump(2) + "\n");
    }
    emit_report(report, options.report_path);
    return report.all_verified() ? kExitOk : kExitVerifyFailed;
}

struct GameOptions {
    std::string builder = "random:p=0.3";
    std::string painter = "first-fit";
    int n = 20;
    int r = 3;
    int palette = 16;
    std::optional<std::uint64_t> seed;
    std::string out_path;
    std::string report_path;
};

int run_game(const GameOptions& options) {
    std::uint64_t seed = resolve_seed(options.seed);
    auto builder = make_builder(options.builder, options.n, options.r,
                                derive_seed(seed, Stream::game, 1));
    auto painter = make_painter(options.painter, options.n, options.palette,
                                derive_seed(seed, Stream::game, 2));
    GameTranscript t = play(*builder, *painter, options.n, options.r, options.palette, seed,
                            options.builder, options.painter);

    Report report("game");
    report.set_config({{"builder", options.builder},
                       {"painter", options.painter},
                       {"n", options.n},
                       {"r", options.r},
                       {"palette", options.palette},
                       {"seed", seed}});
    const char* outcome = t.outcome.type == GameOutcomeType::painter_won     ? "painter_won"
                          : t.outcome.type == GameOutcomeType::builder_won   ? "builder_won"
                                                                             : "referee_rejected";
    report.add_result("outcome", outcome);
    report.add_result("rounds_played", static_cast<int>(t.colors.size()));
    int colors_used = 0;
    {
        std::set<int> distinct(t.colors.begin(), t.colors.end());
        colors_used = static_cast<int>(distinct.size());
    }
    report.add_result("colors_used", colors_used);
    if (options.r >= 2 && t.outcome.type != GameOutcomeType::referee_rejected) {
        report.stamp("kr_free", !contains_clique(t.final_graph, options.r));
    }
    report.stamp("replay_consistent", [&] {
        try {
            replay(t);
            return true;
        } catch (const VerifyError&) {
            return false;
        }
    }());
    if (!options.out_path.empty()) write_file(options.out_path, transcript_to_json(t));
    emit_report(report, options.report_path);
    return report.all_verified() ? kExitOk : kExitVerifyFailed;
}

int run_replay(const std::string& transcript_path, const std::string& report_path) {
    GameTranscript t = transcript_from_json(read_file(transcript_path));
    Report report("replay");
    report.set_config({{"transcript", transcript_path}});
    bool ok = true;
    std::string message = "replay matches the recorded outcome and final graph";
    try {
        replay(t);
    } catch (const VerifyError& e) {
        ok = false;
        message = e.what();
    }
    report.add_result("verdict", message);
    report.stamp("replay_consistent", ok);
    emit_report(report, report_path);
    return ok ? kExitOk : kExitVerifyFailed;
}

struct StrategyTreeOptions {
    std::string builder = "force-independent:r=3,y=2,escalate=1";
    int d = 2;
    int r = 3;
    int N = 4;
    std::string out_path;
    std::string report_path;
};

int run_strategy_tree(const StrategyTreeOptions& options) {
    BuilderFactory factory = [&] {
        return make_builder(options.builder, options.N, options.r, 0);
    };
    StrategyTreeResult tree = strategy_tree_graph(factory, options.d, options.r, options.N);

    Report report("construct.strategy-tree");
    report.set_config({{"builder", options.builder},
                       {"d", options.d},
                       {"r", options.r},
                       {"N", options.N}});
    report.add_result("vertices", tree.graph.vertex_count());
    report.add_result("edges", tree.graph.edge_count());
    report.add_result("open_leaves", tree.open_leaves);
    report.stamp("kr_free", !contains_clique(tree.graph, options.r));
    bool degenerate_ok = true;
    try {
        tree.by_length_order();
    } catch (const GraphError&) {
        degenerate_ok = false;
    }
    report.stamp("d_degenerate_by_length", degenerate_ok);
    OracleLimits limits = OracleLimits::from_env();
    if (tree.graph.vertex_count() <= limits.chi_limit) {
        report.add_result("chromatic_number", chromatic_number(tree.graph, limits.chi_limit));
    }
    if (tree.graph.vertex_count() <= limits.lp_limit) {
        report.add_result("fractional_chromatic",
                          rat_to_string(fractional_chromatic(tree.graph, limits.lp_limit).value));
    }
    if (!options.out_path.empty()) save_edge_list_file(options.out_path, tree.graph);
    emit_report(report, options.report_path);
    return report.all_verified() ? kExitOk : kExitVerifyFailed;
}

struct ZykovOptions {
    std::string gamma = "k1";
    int d = 2;
    int level = 2;
    unsigned long long size_limit = 1000000;
    bool check_recursion = false;
    std::string out_path;
    std::string report_path;
};

int run_zykov(const ZykovOptions& options) {
    LabeledGraph gamma = load_graph_arg(options.gamma);
    ZykovLikeResult result = zykov_like(gamma.graph, options.d, options.level, options.size_limit);

    Report report("construct.zykov-like");
    report.set_config({{"gamma", options.gamma},
                       {"d", options.d},
                       {"level", options.level},
                       {"size_limit", options.size_limit},
                       {"check_recursion", options.check_recursion}});
    report.add_result("vertices", result.graph.vertex_count());
    report.add_result("edges", result.graph.edge_count());
    report.add_result("predicted_sizes", result.predicted_sizes);

    int x = degeneracy_order(gamma.graph).degeneracy;
    int omega = max_clique(gamma.graph);
    report.add_result("degeneracy", degeneracy_order(result.graph).degeneracy);
    report.stamp("degeneracy_bound", degeneracy_order(result.graph).degeneracy <= options.d + x);
    report.stamp("clique_bound", !contains_clique(result.graph, omega + 2));
    OracleLimits limits = OracleLimits::from_env();
    if (result.graph.vertex_count() <= limits.chi_limit) {
        report.add_result("chromatic_number",
                          chromatic_number(result.graph, limits.chi_limit));
    }
    if (result.graph.vertex_count() <= limits.lp_limit) {
        report.add_result("fractional_chromatic",
                          rat_to_string(fractional_chromatic(result.graph, limits.lp_limit).value));
    }
    if (options.check_recursion) {
        FractionalRecursionReport recursion =
            check_fractional_recursion(gamma.graph, options.d, options.level, limits.lp_limit);
        report.add_result("recursion",
                          {{"chi_f_gamma", rat_to_string(recursion.chi_f_gamma)},
                           {"chi_f_level", rat_to_string(recursion.chi_f_level)},
                           {"chi_f_next", rat_to_string(recursion.chi_f_next)},
                           {"rhs", rat_to_string(recursion.rhs)},
                           {"certified_bound", rat_to_string(recursion.certified_bound)}});
        report.stamp("recursion_inequality", recursion.inequality_holds);
        report.stamp("recursion_monotone", recursion.monotone);
        report.stamp("recursion_certificate", recursion.certificate_valid);
    }
    if (!options.out_path.empty()) save_edge_list_file(options.out_path, result.graph);
    emit_report(report, options.report_path);
    return report.all_verified() ? kExitOk : kExitVerifyFailed;
}

int run_chif(const std::string& graph_arg, const std::string& certificate_path,
             const std::string& report_path) {
    LabeledGraph g = load_graph_arg(graph_arg);
    OracleLimits limits = OracleLimits::from_env();
    RationalLPResult lp = fractional_chromatic(g.graph, limits.lp_limit);

    Report report("chif");
    report.set_config({{"graph", graph_arg}, {"lp_limit", limits.lp_limit}});
    report.add_result("fractional_chromatic", rat_to_string(lp.value));
    ordered_json primal = ordered_json::array();
    for (const auto& [set, weight] : lp.primal) {
        ordered_json names = ordered_json::array();
        for (int v : set) names.push_back(g.labels[v]);
        primal.push_back({{"set", names}, {"x", rat_to_string(weight)}});
    }
    report.add_result("primal", primal);

    WeightCertificate cert = certificate_from_dual(lp);
    report.stamp("certificate_verifies", verify_weight_certificate(g.graph, cert));
    Rational primal_total = 0;
    for (const auto& [set, weight] : lp.primal) primal_total += weight;
    report.stamp("strong_duality", primal_total == lp.value);
    if (!certificate_path.empty()) {
        write_file(certificate_path, certificate_to_text(cert, &g.labels));
    }
    emit_report(report, report_path);
    return report.all_verified() ? kExitOk : kExitVerifyFailed;
}

int run_verify(const std::string& file_path, const std::string& graph_arg,
               const std::string& report_path) {
    std::string content = read_file(file_path);
    Report report("verify");
    report.set_config({{"file", file_path}, {"graph", graph_arg}});
    std::string kind = "unknown";
    bool ok = false;
    std::string detail;
    try {
        if (content.find("\"kind\": \"game_transcript\"") != std::string::npos) {
            kind = "game_transcript";
            replay(transcript_from_json(content));
            ok = true;
        } else if (content.find("\"kind\": \"ordered_graph\"") != std::string::npos) {
            kind = "ordered_graph";
            ordered_graph_from_json(content);  // constructor re-validates bounds
            ok = true;
        } else if (content.rfind("vertex,color", 0) == 0) {
            kind = "coloring";
            LabeledGraph g = load_graph_arg(graph_arg);
            Coloring coloring = coloring_from_csv(content, g);
            ok = is_proper_coloring(g.graph, coloring.color);
            if (!ok) detail = "coloring is not proper";
        } else if (content.find("bound ") != std::string::npos) {
            kind = "certificate";
            LabeledGraph g = load_graph_arg(graph_arg);
            WeightCertificate cert = certificate_from_text(content, g);
            auto heaviest = max_weight_independent_set(g.graph, cert.weights);
            ok = heaviest.weight <= cert.bound;
            if (!ok) {
                std::string set_text;
                for (int v : heaviest.set) set_text += g.labels[v] + " ";
                detail = "independent set { " + set_text + "} has weight " +
                         rat_to_string(heaviest.weight) + " > bound " +
                         rat_to_string(cert.bound);
            }
        } else {
            throw IoError("unrecognized artifact format");
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report.add_result("kind", kind);
    if (!detail.empty()) report.add_result("failure", detail);
    report.stamp("artifact_valid", ok);
    emit_report(report, report_path);
    return ok ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"colorlab: graph coloring experiments with exact verification"};
    app.require_subcommand(1);
    app.set_version_flag("--version", version_string());

    SampleOptions sample_options;
    CLI::App* sample = app.add_subcommand("sample", "run the random independent-set sampler");
    sample->add_option("--graph", sample_options.graph, "edge-list file or named graph");
    sample->add_option("--ordered-json", sample_options.ordered_json_path,
                       "ordered-graph JSON input (overrides --graph)");
    sample->add_option("--alpha", sample_options.alpha, "initial weight");
    sample->add_option("--d", sample_options.d, "left-degree parameter (default: degeneracy)");
    sample->add_option("--f", sample_options.f, "left-edge sparsity parameter");
    sample->add_flag("--sparse", sample_options.sparse, "subsample then sample (needs f)");
    sample->add_flag("!--no-cap", sample_options.cap, "disable the weight cap");
    sample->add_option("--trials", sample_options.trials, "Monte-Carlo trials (1 = one sample)");
    sample->add_option("--confidence", sample_options.confidence, "one-sided confidence level");
    sample->add_option("--seed", sample_options.seed, "64-bit seed (default: random, recorded)");
    sample->add_option("--jobs", sample_options.jobs, "worker threads");
    sample->add_option("--out-csv", sample_options.csv_path, "marginal table CSV path");
    sample->add_option("--report", sample_options.report_path, "report JSON path (default stdout)");

    ColorOptions color_options;
    CLI::App* color = app.add_subcommand("color", "peel-coloring via sampled independent sets");
    color->add_option("--graph", color_options.graph)->required();
    color->add_option("--mode", color_options.mode)->check(CLI::IsMember({"desk", "paper"}));
    color->add_option("--rounds", color_options.rounds, "rounds per level (desk mode)");
    color->add_option("--alpha", color_options.alpha);
    color->add_option("--beta", color_options.beta);
    color->add_option("--d", color_options.d);
    color->add_option("--f", color_options.f);
    color->add_option("--C", color_options.paper_C, "paper-mode constant C");
    color->add_option("--c", color_options.paper_c, "paper-mode constant c");
    color->add_option("--restarts", color_options.restarts);
    color->add_option("--bottom-d", color_options.bottom_d);
    color->add_option("--seed", color_options.seed);
    color->add_option("--out", color_options.out_path, "coloring CSV path");
    color->add_option("--trace", color_options.trace_path, "trace JSON path");
    color->add_option("--report", color_options.report_path);

    GameOptions game_options;
    CLI::App* game = app.add_subcommand("game", "play one Builder/Painter game");
    game->add_option("--builder", game_options.builder);
    game->add_option("--painter", game_options.painter);
    game->add_option("-n,--rounds", game_options.n);
    game->add_option("-r,--clique-bound", game_options.r, "0 disables the constraint");
    game->add_option("--palette", game_options.palette);
    game->add_option("--seed", game_options.seed);
    game->add_option("--out", game_options.out_path, "transcript JSON path");
    game->add_option("--report", game_options.report_path);

    std::string replay_path, replay_report;
    CLI::App* replay_cmd = app.add_subcommand("replay", "re-verify a transcript from scratch");
    replay_cmd->add_option("--transcript", replay_path)->required();
    replay_cmd->add_option("--report", replay_report);

    CLI::App* construct = app.add_subcommand("construct", "explicit graph constructions");
    construct->require_subcommand(1);
    StrategyTreeOptions tree_options;
    CLI::App* tree = construct->add_subcommand("strategy-tree", "builder strategy-tree graph");
    tree->add_option("--builder", tree_options.builder);
    tree->add_option("--d", tree_options.d, "palette size / degeneracy bound");
    tree->add_option("--r", tree_options.r, "clique bound");
    tree->add_option("-N,--depth", tree_options.N, "game length");
    tree->add_option("--out", tree_options.out_path, "edge-list output");
    tree->add_option("--report", tree_options.report_path);

    ZykovOptions zykov_options;
    CLI::App* zykov = construct->add_subcommand("zykov-like", "recursive blow-up construction");
    zykov->add_option("--gamma", zykov_options.gamma, "edge-list file or named graph");
    zykov->add_option("--d", zykov_options.d);
    zykov->add_option("--level", zykov_options.level);
    zykov->add_option("--size-limit", zykov_options.size_limit);
    zykov->add_flag("--check-recursion", zykov_options.check_recursion,
                    "verify the fractional recursion into the next level");
    zykov->add_option("--out", zykov_options.out_path, "edge-list output");
    zykov->add_option("--report", zykov_options.report_path);

    std::string chif_graph, chif_certificate, chif_report;
    CLI::App* chif = app.add_subcommand("chif", "exact fractional chromatic number");
    chif->add_option("--graph", chif_graph)->required();
    chif->add_option("--certificate", chif_certificate, "write the dual weight certificate");
    chif->add_option("--report", chif_report);

    std::string verify_file, verify_graph, verify_report;
    CLI::App* verify = app.add_subcommand("verify", "re-check an emitted artifact file");
    verify->add_option("--file", verify_file)->required();
    verify->add_option("--graph", verify_graph, "graph the artifact refers to");
    verify->add_option("--report", verify_report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (sample->parsed()) return run_sample(sample_options);
        if (color->parsed()) return run_color(color_options);
        if (game->parsed()) return run_game(game_options);
        if (replay_cmd->parsed()) return run_replay(replay_path, replay_report);
        if (construct->parsed()) {
            if (tree->parsed()) return run_strategy_tree(tree_options);
            if (zykov->parsed()) return run_zykov(zykov_options);
        }
        if (chif->parsed()) return run_chif(chif_graph, chif_certificate, chif_report);
        if (verify->parsed()) return run_verify(verify_file, verify_graph, verify_report);
        std::cerr << "no subcommand\n";
        return kExitUsage;
    } catch (const SizeLimitError& e) {
        std::cerr << "size limit: " << e.what() << "\n";
        return kExitSizeLimit;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const VerifyError& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kExitVerifyFailed;
    } catch (const PreconditionError& e) {
        std::cerr << "bad parameters: " << e.what() << "\n";
        return kExitBadParams;
    } catch (const GraphError& e) {
        std::cerr << "bad graph: " << e.what() << "\n";
        return kExitBadParams;
    } catch (const PeelRestartError& e) {
        std::cerr << "restart budget exhausted: " << e.what() << "\n";
        return kExitVerifyFailed;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
