#include <doctest.h>

#include "colorlab/oracles.hpp"
#include "colorlab/random_graphs.hpp"
#include "colorlab/zoo.hpp"
#include "support/brute.hpp"

using namespace colorlab;

TEST_CASE("maximal independent sets of small graphs") {
    auto k3 = enumerate_maximal_independent_sets(zoo::complete(3));
    CHECK(k3 == std::vector<VertexSet>{{0}, {1}, {2}});

    auto e3 = enumerate_maximal_independent_sets(zoo::edgeless(3));
    CHECK(e3 == std::vector<VertexSet>{{0, 1, 2}});
}

TEST_CASE("C_5 has exactly five maximal independent sets, each of size 2") {
    // Independent oracle: filter all subsets for maximal independence.
    Graph c5 = zoo::cycle(5);
    std::vector<VertexSet> expected;
    for (const VertexSet& s : testing::all_independent_sets(c5)) {
        bool maximal = true;
        for (int v = 0; v < 5 && maximal; ++v) {
            if (std::binary_search(s.begin(), s.end(), v)) continue;
            VertexSet extended = s;
            extended.insert(std::lower_bound(extended.begin(), extended.end(), v), v);
            if (is_independent(c5, extended)) maximal = false;
        }
        if (maximal) expected.push_back(s);
    }
    std::sort(expected.begin(), expected.end());
    auto got = enumerate_maximal_independent_sets(c5);
    CHECK(got == expected);
    CHECK(got.size() == 5);
    for (const VertexSet& s : got) CHECK(s.size() == 2);
}

TEST_CASE("maximal independent sets match the all-subsets oracle on random graphs") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        Graph g = random_gnp(12, 0.35, seed);
        std::vector<VertexSet> expected;
        for (const VertexSet& s : testing::all_independent_sets(g)) {
            bool maximal = true;
            for (int v = 0; v < g.vertex_count() && maximal; ++v) {
                if (std::binary_search(s.begin(), s.end(), v)) continue;
                bool extendable = true;
                for (int u : s) {
                    if (g.has_edge(u, v)) {
                        extendable = false;
                        break;
                    }
                }
                if (extendable) maximal = false;
            }
            if (maximal) expected.push_back(s);
        }
        std::sort(expected.begin(), expected.end());
        CHECK(enumerate_maximal_independent_sets(g) == expected);
    }
}

TEST_CASE("enumerate_maximal_independent_sets enforces its size limit") {
    CHECK_THROWS_AS(enumerate_maximal_independent_sets(zoo::edgeless(29)), SizeLimitError);
}

TEST_CASE("chromatic numbers of standard graphs") {
    CHECK(chromatic_number(zoo::complete(5)) == 5);
    CHECK(chromatic_number(zoo::cycle(5)) == 3);
    CHECK(chromatic_number(zoo::cycle(6)) == 2);
    CHECK(chromatic_number(zoo::petersen()) == 3);
    CHECK(chromatic_number(zoo::edgeless(7)) == 1);
    CHECK(chromatic_number(Graph()) == 0);
}

namespace {

// Exhaustive k-colorability over all assignments, no pruning.
bool naive_colorable(const Graph& g, int k) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    while (true) {
        bool proper = true;
        for (auto [u, v] : g.edges()) {
            if (color[u] == color[v]) {
                proper = false;
                break;
            }
        }
        if (proper) return true;
        int at = 0;
        while (at < n && ++color[at] == k) color[at++] = 0;
        if (at == n) return false;
    }
}

} // namespace

TEST_CASE("Grotzsch graph needs four colors") {
    Graph g = zoo::grotzsch();
    // Independent oracle: exhaustive refutation of 3-colorability.
    CHECK(!naive_colorable(g, 3));
    CHECK(naive_colorable(g, 4));
    CHECK(chromatic_number(g) == 4);
}

TEST_CASE("chromatic number matches the naive search on random graphs") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Graph g = random_gnp(9, 0.4, seed);
        int chi = chromatic_number(g);
        CHECK(naive_colorable(g, chi));
        if (chi > 1) CHECK(!naive_colorable(g, chi - 1));
    }
}

TEST_CASE("max weight independent set") {
    SUBCASE("all weights zero") {
        Graph g = zoo::cycle(4);
        auto result = max_weight_independent_set(g, {0, 0, 0, 0});
        CHECK(result.weight == 0);
    }
    SUBCASE("K_2 picks the heavier endpoint") {
        Graph k2 = zoo::complete(2);
        auto result = max_weight_independent_set(k2, {Rational(3), Rational(5)});
        CHECK(result.weight == 5);
        CHECK(result.set == VertexSet{1});
    }
    SUBCASE("C_5 with uniform 1/5 weights") {
        Graph c5 = zoo::cycle(5);
        std::vector<Rational> w(5, Rational(1, 5));
        auto result = max_weight_independent_set(c5, w);
        CHECK(result.weight == Rational(2, 5));
        CHECK(result.weight == testing::brute_max_weight_independent(c5, w));
    }
    SUBCASE("random weights agree with brute force") {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            Graph g = random_gnp(10, 0.35, seed);
            std::vector<Rational> w;
            for (int v = 0; v < 10; ++v) w.emplace_back((seed * 31 + v * 7) % 11, 7);
            auto result = max_weight_independent_set(g, w);
            CHECK(result.weight == testing::brute_max_weight_independent(g, w));
            CHECK(is_independent(g, result.set));
        }
    }
    SUBCASE("negative weights are rejected") {
        CHECK_THROWS_AS(max_weight_independent_set(zoo::complete(2), {Rational(-1), Rational(1)}),
                        PreconditionError);
    }
}

TEST_CASE("weight certificates") {
    SUBCASE("uniform 1/3 on K_3 certifies chi_f >= 3") {
        WeightCertificate cert{{Rational(1, 3), Rational(1, 3), Rational(1, 3)}, Rational(1, 3)};
        CHECK(verify_weight_certificate(zoo::complete(3), cert));
    }
    SUBCASE("uniform 1/5 on C_5 with bound 2/5 verifies, with bound 1/3 fails") {
        std::vector<Rational> w(5, Rational(1, 5));
        CHECK(verify_weight_certificate(zoo::cycle(5), {w, Rational(2, 5)}));
        CHECK(!verify_weight_certificate(zoo::cycle(5), {w, Rational(1, 3)}));
    }
    SUBCASE("weights must sum to one") {
        WeightCertificate bad{{Rational(1, 2), Rational(1, 3)}, Rational(1)};
        CHECK_THROWS_AS(verify_weight_certificate(zoo::complete(2), bad), PreconditionError);
    }
}

TEST_CASE("oracle limits come from the environment") {
    OracleLimits defaults;
    CHECK(defaults.mis_limit == 28);
    CHECK(defaults.chi_limit == 40);
    CHECK(defaults.lp_limit == 25);
}
