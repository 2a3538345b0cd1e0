#include <doctest.h>

#include <cmath>

#include "colorlab/rng.hpp"
#include "colorlab/sampler.hpp"
#include "colorlab/random_graphs.hpp"
#include "colorlab/zoo.hpp"
#include "support/process_oracle.hpp"

using namespace colorlab;

namespace {

OrderedGraph identity_ordered(const Graph& g, double d, std::optional<double> f = std::nullopt) {
    std::vector<int> order(static_cast<std::size_t>(g.vertex_count()));
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    return OrderedGraph(g, order, d, f);
}

std::vector<double> monte_carlo_marginals(const OrderedGraph& og, SamplerParams params,
                                          std::int64_t trials) {
    std::vector<double> freq(static_cast<std::size_t>(og.vertex_count()), 0.0);
    for (std::int64_t t = 0; t < trials; ++t) {
        SamplerParams p = params;
        p.seed = derive_seed(params.seed, Stream::trial, static_cast<std::uint64_t>(t));
        for (int v : sample_capped(og, p)) freq[v] += 1.0;
    }
    for (double& f : freq) f /= static_cast<double>(trials);
    return freq;
}

} // namespace

TEST_CASE("sampled sets are independent") {
    OrderedGraph og = degeneracy_order(zoo::petersen()).ordered;
    SamplerParams params{.alpha = 0.4, .d = 3.0, .cap_enabled = true, .seed = 11};
    for (std::uint64_t s = 0; s < 200; ++s) {
        params.seed = s;
        CHECK(is_independent(og.graph(), sample_capped(og, params)));
    }
}

TEST_CASE("left-degree precondition is enforced") {
    OrderedGraph og = degeneracy_order(zoo::complete(4)).ordered;
    SamplerParams params{.alpha = 0.1, .d = 2.0, .cap_enabled = true, .seed = 0};
    CHECK_THROWS_AS(sample_capped(og, params), PreconditionError);
}

TEST_CASE("edgeless marginals: every vertex included with probability 1 - e^{-alpha}") {
    const double alpha = 0.1;
    OrderedGraph og = identity_ordered(zoo::edgeless(6), 1.0);
    auto oracle = testing::enumerate_process(og, alpha, 1.0);
    const double expected = -std::expm1(-alpha);
    for (int v = 0; v < 6; ++v) {
        CHECK(std::abs(static_cast<double>(oracle.marginal[v]) - expected) < 1e-12);
    }
    const std::int64_t trials = 40000;
    SamplerParams params{.alpha = alpha, .d = 1.0, .cap_enabled = true, .seed = 5};
    std::vector<double> freq = monte_carlo_marginals(og, params, trials);
    const double sigma = std::sqrt(expected * (1 - expected) / trials);
    for (int v = 0; v < 6; ++v) CHECK(std::abs(freq[v] - expected) < 4 * sigma);
}

TEST_CASE("K_2 marginals match the two-branch closed form") {
    const double alpha = 0.1;
    // P[v1] = 1 - e^{-a}; P[v2] = e^{-a} (1 - e^{-a e^{a}}).
    const double p1 = -std::expm1(-alpha);
    const double p2 = std::exp(-alpha) * -std::expm1(-alpha * std::exp(alpha));
    OrderedGraph og = identity_ordered(zoo::complete(2), 1.0);
    auto oracle = testing::enumerate_process(og, alpha, 1.0);
    CHECK(std::abs(static_cast<double>(oracle.marginal[0]) - p1) < 1e-12);
    CHECK(std::abs(static_cast<double>(oracle.marginal[1]) - p2) < 1e-12);

    SamplerParams params{.alpha = alpha, .d = 1.0, .cap_enabled = true, .seed = 3};
    std::vector<double> freq = monte_carlo_marginals(og, params, 60000);
    CHECK(std::abs(freq[0] - p1) < 4 * std::sqrt(p1 * (1 - p1) / 60000));
    CHECK(std::abs(freq[1] - p2) < 4 * std::sqrt(p2 * (1 - p2) / 60000));
}

TEST_CASE("alpha -> 0 gives the empty set with probability -> 1") {
    OrderedGraph og = degeneracy_order(zoo::cycle(5)).ordered;
    SamplerParams params{.alpha = 1e-9, .d = 2.0, .cap_enabled = true, .seed = 9};
    int nonempty = 0;
    for (std::uint64_t s = 0; s < 1000; ++s) {
        params.seed = s;
        if (!sample_capped(og, params).empty()) ++nonempty;
    }
    CHECK(nonempty == 0);
}

TEST_CASE("prefix locality: same seed, same prefix intersection") {
    SplitMix rng(1234);
    for (int trial = 0; trial < 100; ++trial) {
        OrderedGraph og = random_triangle_free_left_bounded(
            14, 3, rng.next());
        int cut = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(13)));
        SamplerParams params{.alpha = 0.07, .d = 3.0, .cap_enabled = true, .seed = rng.next()};

        VertexSet full = sample_capped(og, params);
        OrderedGraph prefix = og.prefix(cut);
        VertexSet small = sample_capped(prefix, params);

        // Map prefix-local ids back to original ids.
        VertexSet prefix_vertices;
        for (int i = 0; i < cut; ++i) prefix_vertices.push_back(og.vertex_at(i));
        std::sort(prefix_vertices.begin(), prefix_vertices.end());
        VertexSet mapped;
        for (int v : small) mapped.push_back(prefix_vertices[v]);
        std::sort(mapped.begin(), mapped.end());

        VertexSet expected;
        for (int v : full) {
            if (og.position_of(v) < cut) expected.push_back(v);
        }
        CHECK(mapped == expected);
    }
}

TEST_CASE("exhaustive oracle matches Monte Carlo and the marginal guarantee") {
    SplitMix rng(555);
    for (int instance = 0; instance < 4; ++instance) {
        OrderedGraph og = random_triangle_free_left_bounded(9, 3, rng.next());
        const double d = 3.0;
        const double alpha = 0.8 * std::log(d) / (4.0 * d);
        auto oracle = testing::enumerate_process(og, alpha, d);

        // Lemma property (a) analytically: marginal >= alpha/4.
        for (int v = 0; v < og.vertex_count(); ++v) {
            CHECK(static_cast<double>(oracle.marginal[v]) >= alpha / 4.0);
        }
        // Lemma property (b) analytically: every conditional inclusion
        // probability, given any reachable prefix trace, is <= alpha e^{2ad}.
        const double bound = alpha * std::exp(2 * alpha * d);
        CHECK(static_cast<double>(oracle.max_coin_weight) <= alpha * std::exp(2 * alpha * d));
        for (const auto& by_prefix : oracle.prefix_mass) {
            for (const auto& [prefix, mass] : by_prefix) {
                if (mass.first == 0) continue;
                CHECK(static_cast<double>(mass.second / mass.first) <= bound + 1e-15);
            }
        }
        // Monte Carlo within 4 sigma.
        const std::int64_t trials = 30000;
        SamplerParams params{.alpha = alpha, .d = d, .cap_enabled = true, .seed = rng.next()};
        std::vector<double> freq = monte_carlo_marginals(og, params, trials);
        for (int v = 0; v < og.vertex_count(); ++v) {
            double p = static_cast<double>(oracle.marginal[v]);
            double sigma = std::sqrt(p * (1 - p) / trials);
            CHECK(std::abs(freq[v] - p) < 4 * sigma + 1e-9);
        }
    }
}

TEST_CASE("the cap changes the distribution once weights blow up") {
    // On a path with d = 1 and alpha = 1, two consecutive skips push the
    // third weight past alpha e^{2 alpha d} = e^2, so the capped process
    // zeroes it while the uncapped one nearly always includes the vertex.
    OrderedGraph og = identity_ordered(zoo::path(4), 1.0);
    auto capped = testing::enumerate_process(og, 1.0, 1.0, true);
    auto uncapped = testing::enumerate_process(og, 1.0, 1.0, false);
    CHECK(static_cast<double>(capped.max_coin_weight) <= std::exp(2.0));
    CHECK(static_cast<double>(uncapped.max_coin_weight) > std::exp(2.0));
    CHECK(std::abs(static_cast<double>(capped.marginal[2] - uncapped.marginal[2])) > 1e-3);
}

TEST_CASE("estimate_marginals report carries exact bounds and regime flags") {
    OrderedGraph og = degeneracy_order(zoo::cycle(5)).ordered;
    SamplerParams params{.alpha = 0.05, .d = 2.0, .cap_enabled = true, .seed = 77};
    MarginalReport report = estimate_marginals(og, params, 20000, 0.99, 2);
    CHECK(report.flags.alpha_in_range);
    CHECK(report.flags.triangle_free);
    CHECK(report.flags.in_guarantee_regime());
    CHECK(report.threshold == doctest::Approx(0.0125));
    for (int v = 0; v < 5; ++v) {
        CHECK(report.lower[v] > report.threshold);  // ample margin on C_5
        CHECK(report.lower[v] <= report.frequency[v]);
        CHECK(report.frequency[v] <= report.upper[v]);
        CHECK(!report.violation[v]);
    }
    // Same seed, same report (including across job counts).
    MarginalReport again = estimate_marginals(og, params, 20000, 0.99, 4);
    CHECK(again.hits == report.hits);

    SamplerParams out_of_range = params;
    out_of_range.alpha = 2.0;
    CHECK(!guarantee_flags(og, out_of_range).alpha_in_range);
    SamplerParams no_cap = params;
    no_cap.cap_enabled = false;
    CHECK(!guarantee_flags(og, no_cap).in_guarantee_regime());
}

TEST_CASE("shadow process") {
    const double alpha = 0.1;
    SUBCASE("first position has no forced branches") {
        OrderedGraph og = degeneracy_order(zoo::cycle(5)).ordered;
        SamplerParams params{.alpha = alpha, .d = 2.0, .cap_enabled = true, .seed = 4};
        ShadowResult shadow = shadow_weights(og, params, 0);
        CHECK(shadow.x_total == 0.0);
        for (double w : shadow.weights) CHECK(w == alpha);
    }
    SUBCASE("edgeless graph keeps all weights at alpha") {
        OrderedGraph og = identity_ordered(zoo::edgeless(5), 1.0);
        SamplerParams params{.alpha = alpha, .d = 1.0, .cap_enabled = true, .seed = 4};
        ShadowResult shadow = shadow_weights(og, params, 4);
        CHECK(shadow.x_total == 0.0);
        for (double w : shadow.weights) CHECK(w == alpha);
    }
    SUBCASE("K_2: the forced skip multiplies the weight, matching alpha e^X") {
        OrderedGraph og = identity_ordered(zoo::complete(2), 1.0);
        SamplerParams params{.alpha = alpha, .d = 1.0, .cap_enabled = true, .seed = 4};
        ShadowResult shadow = shadow_weights(og, params, 1);
        CHECK(shadow.x_total == doctest::Approx(alpha));
        CHECK(shadow.weights[1] == doctest::Approx(alpha * std::exp(alpha)));
    }
    SUBCASE("triangle-free precondition is checked") {
        OrderedGraph og = identity_ordered(zoo::complete(3), 2.0);
        SamplerParams params{.alpha = alpha, .d = 2.0, .cap_enabled = true, .seed = 4};
        CHECK_THROWS_AS(shadow_weights(og, params, 2), PreconditionError);
    }
}

TEST_CASE("shadow process obeys the expectation claims on triangle-free graphs") {
    OrderedGraph og = degeneracy_order(zoo::petersen()).ordered;
    const double alpha = 0.06, d = 3.0;
    const int k = 9;  // last position
    VertexSet left = og.left_neighborhood(k);
    REQUIRE(!left.empty());

    const int trials = 20000;
    std::vector<double> weight_sum(left.size(), 0.0), weight_sq(left.size(), 0.0);
    double x_sum = 0.0, x_sq = 0.0;
    for (int t = 0; t < trials; ++t) {
        SamplerParams params{.alpha = alpha, .d = d, .cap_enabled = true,
                             .seed = derive_seed(99, Stream::trial, static_cast<std::uint64_t>(t))};
        ShadowResult shadow = shadow_weights(og, params, k);
        for (std::size_t i = 0; i < left.size(); ++i) {
            weight_sum[i] += shadow.weights[left[i]];
            weight_sq[i] += shadow.weights[left[i]] * shadow.weights[left[i]];
        }
        x_sum += shadow.x_total;
        x_sq += shadow.x_total * shadow.x_total;
        // The weight of v_k right before its step is exactly alpha e^X.
        CHECK(shadow.weights[og.vertex_at(k)] ==
              doctest::Approx(alpha * std::exp(shadow.x_total)).epsilon(1e-9));
    }
    for (std::size_t i = 0; i < left.size(); ++i) {
        double mean = weight_sum[i] / trials;
        double sd = std::sqrt(std::max(0.0, weight_sq[i] / trials - mean * mean) / trials);
        CHECK(mean <= alpha + 3 * sd + 1e-12);
    }
    double x_mean = x_sum / trials;
    double x_sd = std::sqrt(std::max(0.0, x_sq / trials - x_mean * x_mean) / trials);
    CHECK(x_mean <= alpha * d + 3 * x_sd + 1e-12);
}

TEST_CASE("subsample_sparse output structure") {
    SplitMix rng(2024);
    for (int instance = 0; instance < 10; ++instance) {
        OrderedGraph og = random_left_bounded_with_f(60, 6, 0.7, rng.next());
        SubsampleResult sub = subsample_sparse(og, rng.next());
        CHECK(!contains_clique(sub.graph.graph(), 3));
        CHECK(static_cast<double>(sub.graph.max_left_degree()) <= std::sqrt(*og.f()));
        CHECK(sub.graph.vertex_count() == static_cast<int>(sub.kept.size()));
    }
    OrderedGraph plain = degeneracy_order(zoo::cycle(5)).ordered;
    CHECK_THROWS_AS(subsample_sparse(plain, 1), PreconditionError);
}

TEST_CASE("subsample keeps everything on an edgeless graph with p = 1/4 on average") {
    OrderedGraph og = identity_ordered(zoo::edgeless(400), 4.0, 4.0);  // p = 1/4
    double total = 0;
    for (std::uint64_t s = 0; s < 50; ++s) total += subsample_sparse(og, s).kept.size();
    double mean = total / 50.0;
    CHECK(mean > 80.0);   // expectation 100
    CHECK(mean < 120.0);
}

TEST_CASE("sample_sparse returns independent sets of the original graph") {
    SplitMix rng(31);
    for (int instance = 0; instance < 20; ++instance) {
        OrderedGraph og = random_left_bounded_with_f(40, 5, 0.8, rng.next());
        VertexSet set = sample_sparse(og, 0.2, rng.next());
        CHECK(is_independent(og.graph(), set));
    }
}
