#ifndef COLORLAB_RECURSIVE_PAINTER_HPP
#define COLORLAB_RECURSIVE_PAINTER_HPP

#include <map>
#include <memory>

#include "colorlab/witness_painter.hpp"

namespace colorlab {

// On-line class splitting: wraps an inner painter and relabels the k-th block
// of s same-colored vertices with a fresh outer color, so every outer class
// has size at most s. If the inner painter uses x colors the wrapper uses at
// most 2x (sum of ceil(m_i / s)).
class SplitClassesPainter : public PainterStrategy {
public:
    SplitClassesPainter(std::unique_ptr<PainterStrategy> inner, int s);

    std::optional<int> choose_color(const PainterView& view) override;

    int outer_colors_used() const { return next_outer_; }
    // Outer color of a given (inner color, block) pair, if materialized.
    std::optional<int> outer_of(int inner_color, int block) const;

private:
    std::unique_ptr<PainterStrategy> inner_;
    int s_;
    std::map<int, int> count_per_inner_;
    std::map<std::pair<int, int>, int> outer_of_;
    int next_outer_ = 0;
};

// Per-level parameters of the recursive painter; absent fields fall back to
// the reference formulas t = floor(4 m log log m / log m) and
// s = log m / (8 log log m) for the stream length m at that level.
struct RecursiveLevelParams {
    std::optional<int> t;
    std::optional<int> s;
};

// The K_r-free recursive painter: a witness painter split into classes of
// size <= s, with an independent (r-1)-painter run on every class under a
// disjoint palette. r == 2 colors everything with one color.
class RecursivePainter : public PainterStrategy {
public:
    RecursivePainter(int r, int n, std::vector<RecursiveLevelParams> schedule = {},
                     bool validate = true);

    // Local stream interface: vertices arrive as 0,1,2,... with neighbor
    // lists among earlier local vertices. Returns the color (dense local
    // ints) or nullopt when a witness painter underneath got stuck.
    std::optional<int> add_vertex(const VertexSet& neighbors);

    std::optional<int> choose_color(const PainterView& view) override;

    int colors_used() const { return next_color_; }
    int outer_classes_used() const;
    // Max colors spent inside one outer class so far.
    int max_colors_per_class() const;

private:
    struct OuterClass {
        VertexSet members;  // local vertex ids, in arrival order
        std::unique_ptr<RecursivePainter> inner;
        std::map<int, int> global_of_inner;
    };

    int pick_t(int m) const;
    int pick_s(int m) const;

    int r_, n_;
    std::vector<RecursiveLevelParams> schedule_;
    bool validate_;
    int s_ = 1;
    std::unique_ptr<WitnessPainter> witness_;
    std::map<int, int> count_per_witness_color_;
    std::map<std::pair<int, int>, int> class_of_block_;
    std::vector<OuterClass> classes_;
    int next_color_ = 0;
    int vertices_seen_ = 0;
};

} // namespace colorlab

#endif
