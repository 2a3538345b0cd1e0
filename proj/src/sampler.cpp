#include "colorlab/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "colorlab/rng.hpp"
#include "colorlab/stats.hpp"

namespace colorlab {

double SamplerParams::cap() const { return alpha * std::exp(2.0 * alpha * d); }

GuaranteeFlags guarantee_flags(const OrderedGraph& og, const SamplerParams& params) {
    GuaranteeFlags flags;
    flags.alpha_in_range =
        params.d > 1.0 && params.alpha > 0.0 && params.alpha < std::log(params.d) / (4.0 * params.d);
    flags.cap_enabled = params.cap_enabled;
    flags.triangle_free = !contains_clique(og.graph(), 3);
    return flags;
}

namespace {

void check_left_degree(const OrderedGraph& og, double d) {
    if (static_cast<double>(og.max_left_degree()) > d) {
        throw PreconditionError("sampler: left-degree bound " + std::to_string(d) +
                                " violated (max is " + std::to_string(og.max_left_degree()) + ")");
    }
}

} // namespace

WeightProcess::WeightProcess(const OrderedGraph& og, const SamplerParams& params)
    : og_(&og), params_(params),
      weights_(static_cast<std::size_t>(og.vertex_count()), params.alpha) {
    check_left_degree(og, params.d);
}

void WeightProcess::advance() {
    const int i = step_;
    const int v = og_->vertex_at(i);
    const double cap = params_.cap();
    if (params_.cap_enabled) {
        if (weights_[v] > cap) weights_[v] = 0.0;
        // With the cap on, the coin below fires with probability
        // 1 - e^{-w} <= alpha * e^{2 alpha d}.
        if (!(weights_[v] <= cap)) throw VerifyError("weight process: cap invariant violated");
    }
    const double w = weights_[v];
    const double coin = u01(params_.seed, Stream::inclusion_coin, static_cast<std::uint64_t>(i));
    const bool include = coin < -std::expm1(-w);
    if (include) {
        chosen_sorted_.insert(std::lower_bound(chosen_sorted_.begin(), chosen_sorted_.end(), v), v);
        for (int u : og_->graph().neighbors(v)) {
            if (og_->position_of(u) > i) weights_[u] = 0.0;
        }
    } else {
        const double multiplier = std::exp(w);
        for (int u : og_->graph().neighbors(v)) {
            if (og_->position_of(u) > i) weights_[u] *= multiplier;
        }
    }
    ++step_;
}

VertexSet sample_capped(const OrderedGraph& og, const SamplerParams& params) {
    WeightProcess process(og, params);
    while (!process.done()) process.advance();
    return process.chosen();
}

MarginalReport estimate_marginals(const OrderedGraph& og, const SamplerParams& params,
                                  std::int64_t trials, double confidence, int jobs) {
    if (trials < 1) throw PreconditionError("estimate_marginals: trials must be >= 1");
    const int n = og.vertex_count();
    MarginalReport report;
    report.trials = trials;
    report.threshold = params.alpha / 4.0;
    report.confidence = confidence;
    report.flags = guarantee_flags(og, params);
    report.hits.assign(static_cast<std::size_t>(n), 0);

    jobs = std::max(1, jobs);
    std::vector<std::vector<std::int64_t>> partial(
        static_cast<std::size_t>(jobs), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
    auto work = [&](int worker) {
        SamplerParams trial_params = params;
        for (std::int64_t t = worker; t < trials; t += jobs) {
            trial_params.seed =
                derive_seed(params.seed, Stream::trial, static_cast<std::uint64_t>(t));
            for (int v : sample_capped(og, trial_params)) ++partial[worker][v];
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int worker = 0; worker < jobs; ++worker) pool.emplace_back(work, worker);
        for (auto& t : pool) t.join();
    }
    for (const auto& counts : partial) {
        for (int v = 0; v < n; ++v) report.hits[v] += counts[v];
    }

    report.frequency.resize(static_cast<std::size_t>(n));
    report.lower.resize(static_cast<std::size_t>(n));
    report.upper.resize(static_cast<std::size_t>(n));
    report.violation.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        report.frequency[v] = static_cast<double>(report.hits[v]) / static_cast<double>(trials);
        report.lower[v] = clopper_pearson_lower(report.hits[v], trials, confidence);
        report.upper[v] = clopper_pearson_upper(report.hits[v], trials, confidence);
        report.violation[v] = report.upper[v] < report.threshold;
    }
    return report;
}

ShadowResult shadow_weights(const OrderedGraph& og, const SamplerParams& params, int position) {
    const int n = og.vertex_count();
    if (position < 0 || position >= n) throw PreconditionError("shadow_weights: position out of range");
    if (contains_clique(og.graph(), 3)) {
        throw PreconditionError("shadow_weights: input must be triangle-free");
    }
    check_left_degree(og, params.d);

    const int k_vertex = og.vertex_at(position);
    const double cap = params.cap();
    ShadowResult result;
    result.weights.assign(static_cast<std::size_t>(n), params.alpha);
    auto& w = result.weights;
    for (int i = 0; i < position; ++i) {
        const int v = og.vertex_at(i);
        if (params.cap_enabled && w[v] > cap) w[v] = 0.0;
        bool forced_skip = og.graph().has_edge(v, k_vertex);
        bool include = false;
        if (!forced_skip) {
            const double coin =
                u01(params.seed, Stream::inclusion_coin, static_cast<std::uint64_t>(i));
            include = coin < -std::expm1(-w[v]);
        }
        if (include) {
            for (int u : og.graph().neighbors(v)) {
                if (og.position_of(u) > i) w[u] = 0.0;
            }
        } else {
            const double multiplier = std::exp(w[v]);
            for (int u : og.graph().neighbors(v)) {
                if (og.position_of(u) > i) w[u] *= multiplier;
            }
        }
    }
    for (int u : og.graph().neighbors(k_vertex)) {
        if (og.position_of(u) < position) result.x_total += w[u];
    }
    return result;
}

SubsampleResult subsample_sparse(const OrderedGraph& og, std::uint64_t seed) {
    if (!og.f()) throw PreconditionError("subsample_sparse: f parameter is required");
    const double f = *og.f();
    const double d = og.d();
    const double root_f = std::sqrt(f);
    const double p = root_f / (2.0 * d);
    const int n = og.vertex_count();

    std::vector<bool> in_v(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i) {
        in_v[og.vertex_at(i)] =
            u01(seed, Stream::subsample_keep, static_cast<std::uint64_t>(i)) < p;
    }
    VertexSet kept;
    for (int i = 0; i < n; ++i) {
        const int v = og.vertex_at(i);
        if (!in_v[v]) continue;
        VertexSet left_kept;
        for (int u : og.left_neighborhood(i)) {
            if (in_v[u]) left_kept.push_back(u);
        }
        if (static_cast<double>(left_kept.size()) > root_f) continue;
        if (!is_independent(og.graph(), left_kept)) continue;
        kept.push_back(v);
    }
    std::sort(kept.begin(), kept.end());

    Graph sub = og.graph().induced_subgraph(kept);
    std::vector<int> order(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return og.position_of(kept[a]) < og.position_of(kept[b]);
    });
    // The OrderedGraph constructor re-checks the sqrt(f) left-degree bound.
    OrderedGraph sub_ordered(std::move(sub), std::move(order), root_f);
    if (contains_clique(sub_ordered.graph(), 3)) {
        throw VerifyError("subsample_sparse: output not triangle-free");
    }
    return SubsampleResult{std::move(sub_ordered), std::move(kept)};
}

VertexSet sample_sparse(const OrderedGraph& og, double alpha, std::uint64_t seed) {
    if (!og.f()) throw PreconditionError("sample_sparse: f parameter is required");
    SubsampleResult sub = subsample_sparse(og, derive_seed(seed, Stream::trial, 0x5u));
    SamplerParams params;
    params.alpha = alpha;
    params.d = std::sqrt(*og.f());
    params.seed = derive_seed(seed, Stream::trial, 0x6u);
    VertexSet inner = sample_capped(sub.graph, params);
    VertexSet result;
    result.reserve(inner.size());
    for (int v : inner) result.push_back(sub.kept[v]);
    std::sort(result.begin(), result.end());
    return result;
}

MarginalReport estimate_marginals_sparse(const OrderedGraph& og, double alpha, std::uint64_t seed,
                                         std::int64_t trials, double confidence, int jobs) {
    if (trials < 1) throw PreconditionError("estimate_marginals_sparse: trials must be >= 1");
    if (!og.f()) throw PreconditionError("estimate_marginals_sparse: f parameter is required");
    const int n = og.vertex_count();
    const double f = *og.f();
    MarginalReport report;
    report.trials = trials;
    report.threshold = alpha * std::sqrt(f) / (32.0 * og.d());
    report.confidence = confidence;
    report.flags.alpha_in_range = alpha > 0.0 && alpha < std::log(f) / (8.0 * std::sqrt(f));
    report.flags.cap_enabled = true;
    report.flags.triangle_free = !contains_clique(og.graph(), 3);
    report.hits.assign(static_cast<std::size_t>(n), 0);

    jobs = std::max(1, jobs);
    std::vector<std::vector<std::int64_t>> partial(
        static_cast<std::size_t>(jobs), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
    auto work = [&](int worker) {
        for (std::int64_t t = worker; t < trials; t += jobs) {
            std::uint64_t trial_seed =
                derive_seed(seed, Stream::trial, static_cast<std::uint64_t>(t));
            for (int v : sample_sparse(og, alpha, trial_seed)) ++partial[worker][v];
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int worker = 0; worker < jobs; ++worker) pool.emplace_back(work, worker);
        for (auto& t : pool) t.join();
    }
    for (const auto& counts : partial) {
        for (int v = 0; v < n; ++v) report.hits[v] += counts[v];
    }
    report.frequency.resize(static_cast<std::size_t>(n));
    report.lower.resize(static_cast<std::size_t>(n));
    report.upper.resize(static_cast<std::size_t>(n));
    report.violation.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        report.frequency[v] = static_cast<double>(report.hits[v]) / static_cast<double>(trials);
        report.lower[v] = clopper_pearson_lower(report.hits[v], trials, confidence);
        report.upper[v] = clopper_pearson_upper(report.hits[v], trials, confidence);
        report.violation[v] = report.upper[v] < report.threshold;
    }
    return report;
}

} // namespace colorlab
