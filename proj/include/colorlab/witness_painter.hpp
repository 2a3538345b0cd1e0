#ifndef COLORLAB_WITNESS_PAINTER_HPP
#define COLORLAB_WITNESS_PAINTER_HPP

#include "colorlab/game.hpp"

namespace colorlab {

// On-line painter with two palettes of t colors each: colors 0..t-1 ("L")
// always form independent classes, colors t..2t-1 come with witness sets
// N_j certifying that class j lies in a common neighborhood.
//
// After every step the state satisfies:
//   1. every vertex in every N_j carries an L color,
//   2. every vertex in N_j is adjacent to every vertex in C_j,
//   3. |N_j| >= (t/2n)^{|C_j|-1} * t/2 whenever C_j is nonempty,
//   4. the N_j are pairwise disjoint.
//
// The step rule can get stuck only in one place: when a vertex sees all L
// colors, no class j passes the density test, and no class is unused. With
// the reference t = floor(4 n log log n / log n) this cannot happen; for the
// small t values that make branches (2) and (3) reachable at desk scale,
// "stuck" is reported as a result, not an exception.
class WitnessPainter : public PainterStrategy {
public:
    // n is the total stream length the counting in branch (2) is scaled by.
    WitnessPainter(int n, int t, bool validate = true);

    static int default_t(int n);

    // Feeds the next vertex; `neighbors` lists previously added vertices.
    // Returns the color, or nullopt when stuck (the vertex stays uncolored
    // and the state is unchanged).
    std::optional<int> add_vertex(const VertexSet& neighbors);

    // PainterStrategy adapter; throws ProtocolError when stuck since the
    // engine cannot represent that outcome.
    std::optional<int> choose_color(const PainterView& view) override;

    int t() const { return t_; }
    bool stuck() const { return stuck_; }
    int vertices_seen() const { return static_cast<int>(color_of_.size()); }
    // Which rule colored each vertex (1, 2 or 3); for coverage diagnostics.
    const std::vector<int>& branch_taken() const { return branch_taken_; }

    bool is_l_color(int color) const { return color < t_; }
    int class_of_color(int color) const { return color - t_; }

    const std::vector<int>& colors() const { return color_of_; }
    const VertexSet& class_members(int j) const { return classes_[j]; }
    const VertexSet& witness_set(int j) const { return witnesses_[j]; }

    // Re-checks invariants 1-4 from scratch; throws VerifyError on failure.
    void check_invariants() const;

private:
    int n_, t_;
    bool validate_;
    bool stuck_ = false;
    std::vector<int> color_of_;            // per vertex
    std::vector<int> branch_taken_;        // per vertex
    std::vector<VertexSet> adjacency_;     // our own record of the stream
    std::vector<VertexSet> classes_;       // C_j, j in [0, t)
    std::vector<VertexSet> witnesses_;     // N_j
    std::vector<int> witness_owner_;       // per vertex: j with v in N_j, else -1
};

} // namespace colorlab

#endif
