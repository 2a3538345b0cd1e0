#ifndef COLORLAB_BUILDER_FORCE_HPP
#define COLORLAB_BUILDER_FORCE_HPP

#include "colorlab/game.hpp"
#include "colorlab/rational.hpp"

namespace colorlab {

// c_2 = 1, c_r = c_{r-1} * 2^{-r}.
Rational force_constant(int r);

// Recursive Builder that constructs an independent set I with
//   - each color appearing at most y times in I,
//   - |I| >= c_r * y^{r-1},
//   - at most y^{r-1} rounds spent,
// while keeping the revealed graph K_r-free. The recursion maintains an
// independent set J with per-color multiplicity <= y; each iteration either
// extracts I from the colors that appear >= y/2 times or runs the (r-1)-level
// strategy with y/2, joining its vertices to one representative per frequent
// color.
//
// With escalate = true the builder keeps playing after I is complete: it
// grows rainbow independent sets (one vertex per color) and repeatedly
// challenges them with a vertex joined to one representative of each color,
// forcing a fresh color every time. Against a Painter limited to p colors the
// challenge after the rainbow-p set is uncolorable, so the escalating builder
// wins every palette-p game; this is the concrete strategy the strategy-tree
// construction extracts. Without escalation the builder retires once I is
// built.
class ForceIndependentBuilder : public BuilderStrategy {
public:
    ForceIndependentBuilder(int r, int y, bool escalate = false);

    std::optional<BuilderMove> next_move(const BuilderView& view) override;

    bool construction_done() const { return construction_done_; }
    const VertexSet& independent_set() const { return result_; }
    int rounds_used() const { return rounds_used_; }
    Rational rounds_bound() const;  // y^{r-1}

private:
    struct LemmaFrame {
        int r = 2;
        Rational y;
        std::vector<int> context;  // vertices every new vertex must attach to
        std::vector<int> members;  // J, in arrival order
        std::vector<int> picked;   // U of the active sub-recursion
        Rational iterations = 0;
        long long base_added = 0;  // r == 2 bookkeeping
        long long base_target = 0;
    };

    struct RainbowFrame {
        long long target = 0;  // wanted number of distinct colors; <=0 = grow forever
        std::vector<int> reps;
        int challenge_vertex = -1;
    };

    enum class Pending { none, lemma_base, rainbow_challenge };

    std::optional<BuilderMove> run_lemma(const BuilderView& view);
    std::optional<BuilderMove> run_escalation(const BuilderView& view);
    void finish_lemma_frame(std::vector<int> result, const BuilderView& view);

    int r_, y_;
    bool escalate_;
    std::vector<LemmaFrame> stack_;
    std::vector<RainbowFrame> rainbow_;
    Pending pending_ = Pending::none;
    bool construction_done_ = false;
    VertexSet result_;
    int rounds_used_ = 0;
};

} // namespace colorlab

#endif
