#include "colorlab/constructions.hpp"

#include <algorithm>
#include <map>

namespace colorlab {

OrderedGraph StrategyTreeResult::by_length_order() const {
    std::vector<int> order(static_cast<std::size_t>(graph.vertex_count()));
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    return OrderedGraph(graph, std::move(order), static_cast<double>(d));
}

namespace {

// Replays the Builder against a fixed color sequence and returns its move at
// every round 0..|sequence| (the last one is the move right after the
// sequence). A missing entry means the builder retired at that round.
std::vector<std::optional<BuilderMove>> replay_sequence(const BuilderFactory& factory,
                                                        const std::vector<int>& sequence, int d,
                                                        int r, int n_rounds, bool normalize) {
    std::unique_ptr<BuilderStrategy> builder = factory();
    Referee referee(n_rounds, r, d);
    std::vector<std::optional<BuilderMove>> moves;
    for (std::size_t i = 0; i <= sequence.size(); ++i) {
        BuilderView view{referee.revealed(), referee.colors(), static_cast<int>(i), n_rounds, r, d};
        std::optional<BuilderMove> move = builder->next_move(view);
        if (!move) {
            moves.emplace_back(std::nullopt);
            return moves;
        }
        std::sort(move->edges_to_previous.begin(), move->edges_to_previous.end());
        if (normalize) {
            // Keep the first target of each color.
            std::vector<int> kept;
            std::vector<char> seen(static_cast<std::size_t>(d), 0);
            for (int u : move->edges_to_previous) {
                int c = referee.colors()[u];
                if (!seen[c]) {
                    seen[c] = 1;
                    kept.push_back(u);
                }
            }
            move->edges_to_previous = std::move(kept);
        }
        if (static_cast<int>(move->edges_to_previous.size()) > d) {
            throw ProtocolError("strategy tree: builder move exceeds d edges after normalization");
        }
        if (!referee.add_vertex(*move)) {
            throw ProtocolError("strategy tree: builder violated the K_r constraint");
        }
        moves.push_back(std::move(move));
        if (i < sequence.size()) {
            if (!referee.color_legal(static_cast<int>(i), sequence[i])) {
                throw ProtocolError("strategy tree: enumerated sequence replayed as invalid");
            }
            referee.assign_color(static_cast<int>(i), sequence[i]);
        }
    }
    return moves;
}

} // namespace

StrategyTreeResult strategy_tree_graph(const BuilderFactory& factory, int d, int r, int N,
                                       bool normalize_moves) {
    if (d < 1) throw PreconditionError("strategy_tree_graph: d must be >= 1");
    if (N < 1) throw PreconditionError("strategy_tree_graph: N must be >= 1");
    StrategyTreeResult result;
    result.d = d;
    result.r = r;
    result.N = N;

    // Vertices in (length, lex) order: BFS over valid sequences. Every replay
    // re-derives the moves of all prefixes; the move map catches any replay
    // disagreement (a nondeterministic builder).
    std::map<std::vector<int>, int> vertex_of;
    std::map<std::vector<int>, BuilderMove> move_of;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> frontier{{}};

    auto move_for = [&](const std::vector<int>& sequence) -> std::optional<BuilderMove> {
        auto moves = replay_sequence(factory, sequence, d, r, N, normalize_moves);
        for (std::size_t j = 0; j < moves.size(); ++j) {
            if (!moves[j]) continue;
            std::vector<int> prefix(sequence.begin(), sequence.begin() + j);
            auto [it, inserted] = move_of.try_emplace(std::move(prefix), *moves[j]);
            if (!inserted && !(it->second == *moves[j])) {
                throw ProtocolError("strategy tree: nondeterministic builder (same prefix, "
                                    "different move)");
            }
        }
        if (moves.size() <= sequence.size()) return std::nullopt;  // retired
        return moves[sequence.size()];
    };

    for (int length = 0; length < N && !frontier.empty(); ++length) {
        std::vector<std::vector<int>> next;
        for (const std::vector<int>& sequence : frontier) {
            int id = static_cast<int>(result.labels.size());
            vertex_of.emplace(sequence, id);
            result.labels.push_back(sequence);
            std::optional<BuilderMove> move = move_for(sequence);
            if (!move) continue;  // builder retired: no own edges, no children
            for (int target : move->edges_to_previous) {
                // Target v_j was placed at round j, i.e. after colors
                // c_1..c_j were fixed, so it is the length-j prefix vertex.
                std::vector<int> prefix(sequence.begin(), sequence.begin() + target);
                edges.emplace_back(vertex_of.at(prefix), id);
            }
            // A child color is valid iff it avoids the move's target colors.
            std::vector<char> blocked(static_cast<std::size_t>(d), 0);
            for (int target : move->edges_to_previous) blocked[sequence[target]] = 1;
            for (int color = 0; color < d; ++color) {
                if (blocked[color]) continue;
                std::vector<int> child = sequence;
                child.push_back(color);
                next.push_back(std::move(child));
            }
        }
        if (length == N - 1) {
            // Extensions of maximal labels witness that the builder has not
            // yet won; zero means every palette-d painter loses by round N.
            result.open_leaves = static_cast<int>(next.size());
            next.clear();
        }
        frontier = std::move(next);
    }

    result.graph = Graph(static_cast<int>(result.labels.size()), edges);

    // Size bound: sum_{i=0}^{N-1} d^i, computed with saturation.
    unsigned long long bound = 0, power = 1;
    for (int i = 0; i < N; ++i) {
        bound += power;
        if (power > (1ull << 62) / static_cast<unsigned long long>(std::max(d, 2))) {
            bound = ~0ull;
            break;
        }
        power *= static_cast<unsigned long long>(d);
    }
    if (static_cast<unsigned long long>(result.graph.vertex_count()) > bound) {
        throw VerifyError("strategy tree: vertex bound exceeded");
    }
    return result;
}

namespace {

// Saturating arithmetic for the size recurrence.
unsigned long long sat_mul(unsigned long long a, unsigned long long b) {
    if (a != 0 && b > ~0ull / a) return ~0ull;
    return a * b;
}

unsigned long long sat_add(unsigned long long a, unsigned long long b) {
    if (b > ~0ull - a) return ~0ull;
    return a + b;
}

unsigned long long sat_pow(unsigned long long base, int exponent) {
    unsigned long long result = 1;
    for (int i = 0; i < exponent; ++i) result = sat_mul(result, base);
    return result;
}

} // namespace

unsigned long long zykov_predicted_size(int gamma_size, int d, int level,
                                        unsigned long long limit) {
    if (gamma_size < 1) throw PreconditionError("zykov_like: gamma must be nonempty");
    if (d < 1 || level < 1) throw PreconditionError("zykov_like: d and level must be >= 1");
    unsigned long long size = 1;
    for (int k = 1; k < level; ++k) {
        size = sat_add(sat_mul(static_cast<unsigned long long>(d), size),
                       sat_mul(sat_pow(size, d), static_cast<unsigned long long>(gamma_size)));
        if (size > limit) {
            throw SizeLimitError("zykov_like: level " + std::to_string(level) +
                                 " needs at least " + std::to_string(size) +
                                 " vertices, limit is " + std::to_string(limit));
        }
    }
    return size;
}

ZykovLikeResult zykov_like(const Graph& gamma, int d, int level, unsigned long long size_limit) {
    zykov_predicted_size(gamma.vertex_count(), d, level, size_limit);

    ZykovLikeResult result;
    result.level = level;
    result.d = d;
    result.gamma = gamma;
    result.predicted_sizes.push_back(1);

    const int gamma_n = gamma.vertex_count();
    std::vector<int> gamma_order = degeneracy_order(gamma).ordered.order();

    Graph current(1);
    std::vector<int> order{0};
    std::vector<int> copy_of{-1};
    std::vector<long long> block_of{-1};
    for (int k = 1; k < level; ++k) {
        const int base = current.vertex_count();
        std::vector<std::pair<int, int>> edges;
        std::vector<int> next_order;
        // d disjoint copies.
        for (int copy = 0; copy < d; ++copy) {
            int offset = copy * base;
            for (auto [u, v] : current.edges()) edges.emplace_back(u + offset, v + offset);
            for (int position : order) next_order.push_back(position + offset);
        }
        // One gamma block per tuple, joined completely to the tuple.
        long long tuple_count = 1;
        for (int i = 0; i < d; ++i) tuple_count *= base;
        int next_n = d * base + static_cast<int>(tuple_count) * gamma_n;
        std::vector<int> next_copy(static_cast<std::size_t>(next_n), -1);
        std::vector<long long> next_block(static_cast<std::size_t>(next_n), -1);
        for (int copy = 0; copy < d; ++copy) {
            for (int v = 0; v < base; ++v) next_copy[copy * base + v] = copy;
        }
        for (long long tuple = 0; tuple < tuple_count; ++tuple) {
            int block_start = d * base + static_cast<int>(tuple) * gamma_n;
            // Decode the tuple, first copy most significant.
            long long rest = tuple;
            std::vector<int> picks(static_cast<std::size_t>(d));
            for (int i = d - 1; i >= 0; --i) {
                picks[i] = static_cast<int>(rest % base);
                rest /= base;
            }
            for (auto [u, v] : gamma.edges()) {
                edges.emplace_back(block_start + u, block_start + v);
            }
            for (int i = 0; i < d; ++i) {
                int tuple_vertex = i * base + picks[i];
                for (int g = 0; g < gamma_n; ++g) {
                    edges.emplace_back(tuple_vertex, block_start + g);
                }
            }
            for (int g : gamma_order) next_order.push_back(block_start + g);
            for (int g = 0; g < gamma_n; ++g) next_block[block_start + g] = tuple;
        }
        current = Graph(next_n, edges);
        order = std::move(next_order);
        copy_of = std::move(next_copy);
        block_of = std::move(next_block);
        result.predicted_sizes.push_back(
            sat_add(sat_mul(static_cast<unsigned long long>(d),
                            static_cast<unsigned long long>(base)),
                    sat_mul(sat_pow(static_cast<unsigned long long>(base), d),
                            static_cast<unsigned long long>(gamma_n))));
        if (result.predicted_sizes.back() != static_cast<unsigned long long>(next_n)) {
            throw VerifyError("zykov_like: size recurrence mismatch");
        }
    }
    result.graph = std::move(current);
    result.order = std::move(order);
    result.copy_of = std::move(copy_of);
    result.block_of = std::move(block_of);
    return result;
}

FractionalRecursionReport check_fractional_recursion(const Graph& gamma, int d, int level,
                                                     int lp_limit) {
    FractionalRecursionReport report;
    report.level = level;

    ZykovLikeResult g_n = zykov_like(gamma, d, level, static_cast<unsigned long long>(lp_limit));
    ZykovLikeResult g_next =
        zykov_like(gamma, d, level + 1, static_cast<unsigned long long>(lp_limit));

    RationalLPResult lp_gamma = fractional_chromatic(gamma, lp_limit);
    RationalLPResult lp_n = fractional_chromatic(g_n.graph, lp_limit);
    RationalLPResult lp_next = fractional_chromatic(g_next.graph, lp_limit);
    report.chi_f_gamma = lp_gamma.value;
    report.chi_f_level = lp_n.value;
    report.chi_f_next = lp_next.value;
    report.monotone = lp_n.value <= lp_next.value;

    Rational inv_n = 1 / lp_n.value;
    Rational bound_unnormalized =
        d * inv_n + (1 / lp_gamma.value) * rat_pow(1 - inv_n, d);
    report.rhs = bound_unnormalized / (d + 1);
    report.inequality_holds = 1 / lp_next.value <= report.rhs;

    // The proof's weighting on level n+1: copies carry the optimal normalized
    // dual of level n, a gamma block for tuple C carries gamma's dual scaled
    // by the product of the tuple's weights. Total mass d+1, normalized here.
    std::vector<Rational> w_n = certificate_from_dual(lp_n).weights;
    std::vector<Rational> w_gamma = certificate_from_dual(lp_gamma).weights;
    const int base = g_n.graph.vertex_count();
    const int gamma_n = gamma.vertex_count();
    const int next_n = g_next.graph.vertex_count();
    WeightCertificate cert;
    cert.weights.assign(static_cast<std::size_t>(next_n), Rational(0));
    for (int v = 0; v < next_n; ++v) {
        if (g_next.copy_of[v] >= 0) {
            cert.weights[v] = w_n[v - g_next.copy_of[v] * base];
        } else {
            long long tuple = g_next.block_of[v];
            int block_start = d * base + static_cast<int>(tuple) * gamma_n;
            Rational product = w_gamma[v - block_start];
            long long rest = tuple;
            std::vector<int> picks(static_cast<std::size_t>(d));
            for (int i = d - 1; i >= 0; --i) {
                picks[i] = static_cast<int>(rest % base);
                rest /= base;
            }
            for (int i = 0; i < d; ++i) product *= w_n[picks[i]];
            cert.weights[v] = product;
        }
    }
    Rational total = 0;
    for (const Rational& w : cert.weights) total += w;
    if (total != Rational(d + 1)) {
        throw VerifyError("check_fractional_recursion: weighting mass is not d+1");
    }
    for (Rational& w : cert.weights) w /= total;
    cert.bound = bound_unnormalized / (d + 1);
    report.certificate = cert;
    report.certified_bound = cert.bound;
    report.certificate_valid = verify_weight_certificate(g_next.graph, cert, lp_limit);
    return report;
}

RecursionLemmaReport check_recursion_lemma(const Graph& gamma, int d, int max_level,
                                           int lp_limit) {
    RecursionLemmaReport report;
    report.d = d;
    Rational chi_gamma = fractional_chromatic(gamma, lp_limit).value;
    report.threshold = std::log(rat_to_double(Rational(d) / chi_gamma) + 3.0);
    for (int level = 1; level <= max_level; ++level) {
        unsigned long long size;
        try {
            size = zykov_predicted_size(gamma.vertex_count(), d, level,
                                        static_cast<unsigned long long>(lp_limit));
        } catch (const SizeLimitError&) {
            break;
        }
        (void)size;
        ZykovLikeResult built = zykov_like(gamma, d, level,
                                           static_cast<unsigned long long>(lp_limit));
        Rational chi = fractional_chromatic(built.graph, lp_limit).value;
        report.chi_f_by_level.push_back(chi);
        report.ratio.push_back(rat_to_double(Rational(d) / chi));
    }
    if (!report.ratio.empty()) {
        report.finite_level_within_threshold = report.ratio.back() < report.threshold;
    }
    return report;
}

} // namespace colorlab
