#include "colorlab/game.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "colorlab/rng.hpp"

namespace colorlab {

using ordered_json = nlohmann::ordered_json;

Referee::Referee(int n, int r, int palette_size) : n_(n), r_(r), palette_size_(palette_size) {
    if (n < 1) throw PreconditionError("game: n must be >= 1");
    if (r != 0 && r < 2) throw PreconditionError("game: r must be 0 (unconstrained) or >= 2");
    if (palette_size < 1) throw PreconditionError("game: palette must be nonempty");
    adj_.resize(static_cast<std::size_t>(n));
}

const Graph& Referee::revealed() const {
    if (!cache_) {
        std::vector<std::pair<int, int>> edges;
        for (int v = 0; v < revealed_count_; ++v) {
            for (int u : adj_[v]) {
                if (u < v) edges.emplace_back(u, v);
            }
        }
        cache_ = Graph(revealed_count_, edges);
    }
    return *cache_;
}

bool Referee::move_allowed(const BuilderMove& move) const {
    if (r_ == 0) return true;
    // The new vertex closes a K_r iff its chosen neighbors contain K_{r-1}.
    const auto& targets = move.edges_to_previous;
    if (static_cast<int>(targets.size()) < r_ - 1) return true;
    std::vector<int> current;
    auto recurse = [&](auto&& self, std::size_t from) -> bool {
        if (static_cast<int>(current.size()) == r_ - 1) return true;
        for (std::size_t i = from; i < targets.size(); ++i) {
            int v = targets[i];
            bool joined = true;
            for (int u : current) {
                if (!std::binary_search(adj_[v].begin(), adj_[v].end(), u)) {
                    joined = false;
                    break;
                }
            }
            if (!joined) continue;
            current.push_back(v);
            if (self(self, i + 1)) return true;
            current.pop_back();
        }
        return false;
    };
    return !recurse(recurse, 0);
}

bool Referee::add_vertex(const BuilderMove& move) {
    const int vertex = revealed_count_;
    if (vertex >= n_) throw ProtocolError("referee: too many rounds");
    const auto& targets = move.edges_to_previous;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i] < 0 || targets[i] >= vertex) {
            throw ProtocolError("builder move targets vertex " + std::to_string(targets[i]) +
                                " outside 0.." + std::to_string(vertex - 1));
        }
        if (i > 0 && targets[i] <= targets[i - 1]) {
            throw ProtocolError("builder move targets must be strictly increasing");
        }
    }
    if (!move_allowed(move)) return false;
    for (int u : targets) {
        adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), vertex), vertex);
        adj_[vertex].insert(std::lower_bound(adj_[vertex].begin(), adj_[vertex].end(), u), u);
    }
    ++revealed_count_;
    cache_.reset();
    return true;
}

bool Referee::color_legal(int vertex, int color) const {
    if (color < 0 || color >= palette_size_) return false;
    for (int u : adj_[vertex]) {
        if (u < static_cast<int>(colors_.size()) && colors_[u] == color) return false;
    }
    return true;
}

bool Referee::any_color_legal(int vertex) const {
    // Enough to scan deg+1 candidate colors.
    for (int c = 0; c < palette_size_ && c <= static_cast<int>(adj_[vertex].size()); ++c) {
        if (color_legal(vertex, c)) return true;
    }
    return false;
}

void Referee::assign_color(int vertex, int color) {
    if (vertex != static_cast<int>(colors_.size())) {
        throw ProtocolError("referee: colors must be assigned in round order");
    }
    if (!color_legal(vertex, color)) throw ProtocolError("referee: illegal color");
    colors_.push_back(color);
}

GameTranscript play(BuilderStrategy& builder, PainterStrategy& painter, int n, int r,
                    int palette_size, std::uint64_t seed, const std::string& builder_name,
                    const std::string& painter_name) {
    Referee referee(n, r, palette_size);
    GameTranscript t;
    t.n = n;
    t.r = r;
    t.palette_size = palette_size;
    t.seed = seed;
    t.builder_name = builder_name;
    t.painter_name = painter_name;

    for (int round = 0; round < n; ++round) {
        BuilderView bview{referee.revealed(), referee.colors(), round, n, r, palette_size};
        std::optional<BuilderMove> move = builder.next_move(bview);
        if (!move) break;  // builder retires
        std::sort(move->edges_to_previous.begin(), move->edges_to_previous.end());
        t.moves.push_back(*move);
        if (!referee.add_vertex(*move)) {
            t.outcome = {GameOutcomeType::referee_rejected, round};
            t.final_graph = referee.revealed();
            return t;
        }
        PainterView pview{referee.revealed(), referee.colors(), round, n, r, palette_size};
        std::optional<int> color = painter.choose_color(pview);
        if (!color || !referee.color_legal(round, *color)) {
            if (referee.any_color_legal(round)) {
                throw ProtocolError("painter " + (painter_name.empty() ? "?" : painter_name) +
                                    " resigned or played illegally with a legal color available "
                                    "at round " +
                                    std::to_string(round));
            }
            t.outcome = {GameOutcomeType::builder_won, round};
            t.final_graph = referee.revealed();
            return t;
        }
        referee.assign_color(round, *color);
        t.colors.push_back(*color);
    }
    t.outcome = {GameOutcomeType::painter_won, -1};
    t.final_graph = referee.revealed();
    return t;
}

GameTranscript replay(const GameTranscript& t) {
    Referee referee(t.n, t.r, t.palette_size);
    GameTranscript fresh = t;
    fresh.outcome = {GameOutcomeType::painter_won, -1};
    for (std::size_t round = 0; round < t.moves.size(); ++round) {
        if (!referee.add_vertex(t.moves[round])) {
            fresh.outcome = {GameOutcomeType::referee_rejected, static_cast<int>(round)};
            break;
        }
        if (round < t.colors.size()) {
            referee.assign_color(static_cast<int>(round), t.colors[round]);
        } else {
            if (referee.any_color_legal(static_cast<int>(round))) {
                throw VerifyError("replay: transcript claims builder_won but a legal color "
                                  "exists at round " +
                                  std::to_string(round));
            }
            fresh.outcome = {GameOutcomeType::builder_won, static_cast<int>(round)};
            break;
        }
    }
    fresh.final_graph = referee.revealed();
    if (fresh.outcome != t.outcome) throw VerifyError("replay: outcome mismatch");
    if (!(fresh.final_graph == t.final_graph)) throw VerifyError("replay: final graph mismatch");
    return fresh;
}

std::optional<BuilderMove> PathBuilder::next_move(const BuilderView& view) {
    BuilderMove move;
    if (view.round > 0) move.edges_to_previous.push_back(view.round - 1);
    return move;
}

std::optional<BuilderMove> RandomBuilder::next_move(const BuilderView& view) {
    SplitMix rng(substream(seed_, Stream::game, static_cast<std::uint64_t>(view.round)));
    BuilderMove move;
    for (int u = 0; u < view.round; ++u) {
        if (rng.next_u01() < density_) move.edges_to_previous.push_back(u);
    }
    if (view.r == 0) return move;
    // Drop random targets until the move stops closing a K_r.
    Referee probe(view.round + 1, view.r, 1);
    for (int v = 0; v < view.round; ++v) {
        BuilderMove mv;
        for (int u : view.revealed.neighbors(v)) {
            if (u < v) mv.edges_to_previous.push_back(u);
        }
        probe.add_vertex(mv);
    }
    while (!probe.move_allowed(move)) {
        std::size_t victim = rng.next_below(move.edges_to_previous.size());
        move.edges_to_previous.erase(move.edges_to_previous.begin() +
                                     static_cast<std::ptrdiff_t>(victim));
    }
    return move;
}

std::optional<int> FirstFitPainter::choose_color(const PainterView& view) {
    for (int c = 0; c < view.palette_size; ++c) {
        bool legal = true;
        for (int u : view.revealed.neighbors(view.vertex)) {
            if (u < view.vertex && view.colors[u] == c) {
                legal = false;
                break;
            }
        }
        if (legal) return c;
    }
    return std::nullopt;
}

std::optional<int> RandomLegalPainter::choose_color(const PainterView& view) {
    std::vector<int> legal;
    for (int c = 0; c < view.palette_size; ++c) {
        bool ok = true;
        for (int u : view.revealed.neighbors(view.vertex)) {
            if (u < view.vertex && view.colors[u] == c) {
                ok = false;
                break;
            }
        }
        if (ok) legal.push_back(c);
    }
    if (legal.empty()) return std::nullopt;
    SplitMix rng(substream(seed_, Stream::game, static_cast<std::uint64_t>(view.vertex)));
    return legal[rng.next_below(legal.size())];
}

namespace {

ordered_json graph_to_json(const Graph& g) {
    ordered_json j;
    j["n"] = g.vertex_count();
    ordered_json edges = ordered_json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j;
}

Graph graph_from_json(const ordered_json& j) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return Graph(j.at("n").get<int>(), edges);
}

std::string outcome_name(GameOutcomeType type) {
    switch (type) {
        case GameOutcomeType::painter_won: return "painter_won";
        case GameOutcomeType::builder_won: return "builder_won";
        case GameOutcomeType::referee_rejected: return "referee_rejected";
    }
    return "?";
}

GameOutcomeType outcome_from_name(const std::string& name) {
    if (name == "painter_won") return GameOutcomeType::painter_won;
    if (name == "builder_won") return GameOutcomeType::builder_won;
    if (name == "referee_rejected") return GameOutcomeType::referee_rejected;
    throw IoError("unknown outcome '" + name + "'");
}

} // namespace

std::string transcript_to_json(const GameTranscript& t) {
    ordered_json j;
    j["kind"] = "game_transcript";
    j["n"] = t.n;
    j["r"] = t.r;
    j["palette_size"] = t.palette_size;
    j["seed"] = t.seed;
    j["builder"] = t.builder_name;
    j["painter"] = t.painter_name;
    ordered_json moves = ordered_json::array();
    for (const BuilderMove& move : t.moves) moves.push_back(move.edges_to_previous);
    j["moves"] = std::move(moves);
    j["colors"] = t.colors;
    j["outcome"] = {{"type", outcome_name(t.outcome.type)}, {"round", t.outcome.round}};
    j["final_graph"] = graph_to_json(t.final_graph);
    return j.dump(2) + "\n";
}

GameTranscript transcript_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw IoError(std::string("transcript parse error: ") + e.what());
    }
    if (j.value("kind", "") != "game_transcript") throw IoError("not a game transcript file");
    GameTranscript t;
    t.n = j.at("n").get<int>();
    t.r = j.at("r").get<int>();
    t.palette_size = j.at("palette_size").get<int>();
    t.seed = j.at("seed").get<std::uint64_t>();
    t.builder_name = j.value("builder", "");
    t.painter_name = j.value("painter", "");
    for (const auto& m : j.at("moves")) {
        BuilderMove move;
        for (const auto& u : m) move.edges_to_previous.push_back(u.get<int>());
        t.moves.push_back(std::move(move));
    }
    for (const auto& c : j.at("colors")) t.colors.push_back(c.get<int>());
    t.outcome.type = outcome_from_name(j.at("outcome").at("type").get<std::string>());
    t.outcome.round = j.at("outcome").at("round").get<int>();
    t.final_graph = graph_from_json(j.at("final_graph"));
    return t;
}

} // namespace colorlab
