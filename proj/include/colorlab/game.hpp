#ifndef COLORLAB_GAME_HPP
#define COLORLAB_GAME_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "colorlab/graph.hpp"

namespace colorlab {

// One Builder move: the set of already-revealed vertices the new vertex is
// joined to (sorted, no duplicates).
struct BuilderMove {
    std::vector<int> edges_to_previous;
    bool operator==(const BuilderMove&) const = default;
};

enum class GameOutcomeType { painter_won, builder_won, referee_rejected };

struct GameOutcome {
    GameOutcomeType type = GameOutcomeType::painter_won;
    int round = -1;  // deciding round for builder_won / referee_rejected
    bool operator==(const GameOutcome&) const = default;
};

struct GameTranscript {
    int n = 0;
    int r = 0;  // clique bound; 0 disables the constraint
    int palette_size = 0;
    std::uint64_t seed = 0;
    std::string builder_name;
    std::string painter_name;
    std::vector<BuilderMove> moves;
    std::vector<int> colors;
    GameOutcome outcome;
    Graph final_graph;
};

struct BuilderView {
    const Graph& revealed;            // vertices 0..round-1
    const std::vector<int>& colors;   // Painter's colors so far
    int round;                        // index of the vertex about to be placed
    int n, r, palette_size;
};

struct PainterView {
    const Graph& revealed;            // includes the new vertex and its edges
    const std::vector<int>& colors;   // colors of earlier vertices
    int vertex;                       // the vertex to color
    int n, r, palette_size;
};

class BuilderStrategy {
public:
    virtual ~BuilderStrategy() = default;
    // nullopt retires: the game ends early and Painter wins.
    virtual std::optional<BuilderMove> next_move(const BuilderView& view) = 0;
};

class PainterStrategy {
public:
    virtual ~PainterStrategy() = default;
    // nullopt claims no legal color exists; the referee verifies that claim.
    virtual std::optional<int> choose_color(const PainterView& view) = 0;
};

// Incremental referee: tracks the revealed graph, enforces the K_r constraint
// on Builder and proper coloring on Painter.
class Referee {
public:
    Referee(int n, int r, int palette_size);

    int round() const { return static_cast<int>(colors_.size()); }
    const Graph& revealed() const;
    const std::vector<int>& colors() const { return colors_; }

    // Whether adding a vertex adjacent to `targets` keeps the graph K_r-free.
    bool move_allowed(const BuilderMove& move) const;
    // Validates indices and adds the vertex (throws ProtocolError on bad
    // indices, returns false if the move would create K_r).
    bool add_vertex(const BuilderMove& move);
    bool color_legal(int vertex, int color) const;
    bool any_color_legal(int vertex) const;
    void assign_color(int vertex, int color);

private:
    int n_, r_, palette_size_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> colors_;
    int revealed_count_ = 0;
    mutable std::optional<Graph> cache_;
};

GameTranscript play(BuilderStrategy& builder, PainterStrategy& painter, int n, int r,
                    int palette_size, std::uint64_t seed = 0,
                    const std::string& builder_name = "", const std::string& painter_name = "");

// Re-runs the referee over the recorded moves and colors from scratch and
// returns the recomputed transcript. Throws VerifyError if the recorded
// outcome or final graph cannot be reproduced.
GameTranscript replay(const GameTranscript& t);

// Baseline strategies.
class TrivialBuilder : public BuilderStrategy {
public:
    std::optional<BuilderMove> next_move(const BuilderView&) override { return BuilderMove{}; }
};

class PathBuilder : public BuilderStrategy {
public:
    std::optional<BuilderMove> next_move(const BuilderView& view) override;
};

// Joins the new vertex to a density-p random subset of the revealed vertices,
// then drops members until the move is legal for the game's r.
class RandomBuilder : public BuilderStrategy {
public:
    RandomBuilder(double density, std::uint64_t seed) : density_(density), seed_(seed) {}
    std::optional<BuilderMove> next_move(const BuilderView& view) override;

private:
    double density_;
    std::uint64_t seed_;
};

class FirstFitPainter : public PainterStrategy {
public:
    std::optional<int> choose_color(const PainterView& view) override;
};

class RandomLegalPainter : public PainterStrategy {
public:
    explicit RandomLegalPainter(std::uint64_t seed) : seed_(seed) {}
    std::optional<int> choose_color(const PainterView& view) override;

private:
    std::uint64_t seed_;
};

// Strategy factories used by the CLI and tests: "first-fit", "random:p=0.4",
// "witness:t=16", "force-independent:r=3,y=4,escalate=1", ...
std::unique_ptr<BuilderStrategy> make_builder(const std::string& text, int n, int r,
                                              std::uint64_t seed);
std::unique_ptr<PainterStrategy> make_painter(const std::string& text, int n, int palette_size,
                                              std::uint64_t seed);

// Transcript (de)serialization; the format is self-contained.
std::string transcript_to_json(const GameTranscript& t);
GameTranscript transcript_from_json(const std::string& text);

} // namespace colorlab

#endif
