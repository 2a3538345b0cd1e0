#include "colorlab/builder_force.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace colorlab {

Rational force_constant(int r) {
    if (r < 2) throw PreconditionError("force_constant: r must be >= 2");
    Rational c = 1;
    for (int k = 3; k <= r; ++k) c /= rat_pow(Rational(2), k);
    return c;
}

namespace {

BigInt rat_ceil(const Rational& value) {
    BigInt num = rat_num(value), den = rat_den(value);
    if (num <= 0) return 0;
    return (num + den - 1) / den;
}

std::map<int, int> color_counts(const std::vector<int>& members, const std::vector<int>& colors) {
    std::map<int, int> counts;
    for (int v : members) ++counts[colors[v]];
    return counts;
}

} // namespace

ForceIndependentBuilder::ForceIndependentBuilder(int r, int y, bool escalate)
    : r_(r), y_(y), escalate_(escalate) {
    if (r < 2) throw PreconditionError("force builder: r must be >= 2");
    if (y < 1) throw PreconditionError("force builder: y must be >= 1");
    if (r >= 3 && y % 2 != 0) {
        throw PreconditionError("force builder: y must be even when r >= 3");
    }
    if (escalate && r < 3) {
        throw PreconditionError("force builder: escalation needs r >= 3 (it adds edges)");
    }
    LemmaFrame root;
    root.r = r;
    root.y = y;
    if (r == 2) root.base_target = y;
    stack_.push_back(std::move(root));
}

Rational ForceIndependentBuilder::rounds_bound() const {
    return rat_pow(Rational(y_), r_ - 1);
}

std::optional<BuilderMove> ForceIndependentBuilder::next_move(const BuilderView& view) {
    if (!construction_done_) {
        std::optional<BuilderMove> move = run_lemma(view);
        if (move) {
            ++rounds_used_;
            return move;
        }
        // The lemma phase just completed; fall through.
    }
    if (!escalate_) return std::nullopt;
    return run_escalation(view);
}

void ForceIndependentBuilder::finish_lemma_frame(std::vector<int> result,
                                                 const BuilderView& view) {
    stack_.pop_back();
    if (stack_.empty()) {
        std::sort(result.begin(), result.end());
        result_ = std::move(result);
        construction_done_ = true;
        if (escalate_) {
            // Seed the escalation with one representative per color of I.
            RainbowFrame root;
            root.target = -1;
            std::set<int> seen;
            for (int v : result_) {
                if (seen.insert(view.colors[v]).second) root.reps.push_back(v);
            }
            rainbow_.push_back(std::move(root));
        }
        return;
    }
    // Splice: J <- (J \ U) ∪ V.
    LemmaFrame& parent = stack_.back();
    std::vector<int> next;
    for (int v : parent.members) {
        if (std::find(parent.picked.begin(), parent.picked.end(), v) == parent.picked.end()) {
            next.push_back(v);
        }
    }
    next.insert(next.end(), result.begin(), result.end());
    parent.members = std::move(next);
    parent.picked.clear();
    parent.iterations += 1;
}

std::optional<BuilderMove> ForceIndependentBuilder::run_lemma(const BuilderView& view) {
    if (pending_ == Pending::lemma_base) {
        // The vertex emitted last round joined the top frame.
        pending_ = Pending::none;
        stack_.back().members.push_back(view.round - 1);
        ++stack_.back().base_added;
    }
    while (!stack_.empty()) {
        LemmaFrame& frame = stack_.back();
        if (frame.r == 2) {
            if (frame.base_added < frame.base_target) {
                BuilderMove move;
                move.edges_to_previous = frame.context;
                std::sort(move.edges_to_previous.begin(), move.edges_to_previous.end());
                pending_ = Pending::lemma_base;
                return move;
            }
            finish_lemma_frame(frame.members, view);
            continue;
        }
        std::map<int, int> counts = color_counts(frame.members, view.colors);
        std::vector<int> frequent;  // colors with count >= y/2
        for (auto [color, count] : counts) {
            if (Rational(2LL * count) >= frame.y) frequent.push_back(color);
        }
        Rational gamma_threshold =
            force_constant(frame.r - 1) * rat_pow(Rational(1, 2), frame.r - 1) *
            rat_pow(frame.y, frame.r - 2);
        if (Rational(static_cast<long long>(frequent.size())) >= gamma_threshold) {
            std::vector<int> extracted;
            for (int v : frame.members) {
                if (std::binary_search(frequent.begin(), frequent.end(), view.colors[v])) {
                    extracted.push_back(v);
                }
            }
            finish_lemma_frame(std::move(extracted), view);
            continue;
        }
        Rational size_goal = force_constant(frame.r) * rat_pow(frame.y, frame.r - 1);
        if (frame.iterations >= frame.y / 2 ||
            Rational(static_cast<long long>(frame.members.size())) >= size_goal) {
            finish_lemma_frame(frame.members, view);
            continue;
        }
        // One representative per frequent color, then recurse with y/2.
        frame.picked.clear();
        for (int color : frequent) {
            for (int v : frame.members) {
                if (view.colors[v] == color) {
                    frame.picked.push_back(v);
                    break;
                }
            }
        }
        LemmaFrame child;
        child.r = frame.r - 1;
        child.y = frame.y / 2;
        child.context = frame.context;
        child.context.insert(child.context.end(), frame.picked.begin(), frame.picked.end());
        if (child.r == 2) child.base_target = static_cast<long long>(rat_ceil(child.y));
        stack_.push_back(std::move(child));
    }
    return std::nullopt;
}

std::optional<BuilderMove> ForceIndependentBuilder::run_escalation(const BuilderView& view) {
    if (pending_ == Pending::rainbow_challenge) {
        pending_ = Pending::none;
        RainbowFrame& frame = rainbow_.back();
        const int u = frame.challenge_vertex;
        frame.challenge_vertex = -1;
        if (frame.reps.empty()) {
            frame.reps.push_back(u);  // a fresh rainbow-1 set
        } else {
            // Need a fresh rainbow-|reps| set before merging in u.
            RainbowFrame child;
            child.target = static_cast<long long>(frame.reps.size());
            frame.challenge_vertex = u;
            rainbow_.push_back(std::move(child));
        }
    }
    while (true) {
        RainbowFrame& frame = rainbow_.back();
        if (frame.target > 0 && static_cast<long long>(frame.reps.size()) >= frame.target) {
            // Deliver this rainbow set to the parent merge.
            std::vector<int> fresh = frame.reps;
            rainbow_.pop_back();
            RainbowFrame& parent = rainbow_.back();
            const int u = parent.challenge_vertex;
            parent.challenge_vertex = -1;
            const int u_color = view.colors[u];
            int same_color = -1;
            for (int w : fresh) {
                if (view.colors[w] == u_color) {
                    same_color = w;
                    break;
                }
            }
            if (same_color < 0) {
                fresh.push_back(u);  // u's color is new to the fresh set
                parent.reps = std::move(fresh);
            } else {
                parent.reps.push_back(same_color);
            }
            continue;
        }
        // Challenge: a vertex joined to one representative of each color.
        BuilderMove move;
        move.edges_to_previous = frame.reps;
        std::sort(move.edges_to_previous.begin(), move.edges_to_previous.end());
        frame.challenge_vertex = view.round;
        pending_ = Pending::rainbow_challenge;
        return move;
    }
}

} // namespace colorlab
