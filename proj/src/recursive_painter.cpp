#include "colorlab/recursive_painter.hpp"

#include <algorithm>
#include <cmath>

namespace colorlab {

SplitClassesPainter::SplitClassesPainter(std::unique_ptr<PainterStrategy> inner, int s)
    : inner_(std::move(inner)), s_(s) {
    if (s < 1) throw PreconditionError("split_classes: s must be >= 1");
}

std::optional<int> SplitClassesPainter::choose_color(const PainterView& view) {
    std::optional<int> inner_color = inner_->choose_color(view);
    if (!inner_color) return std::nullopt;
    int block = count_per_inner_[*inner_color]++ / s_;
    auto [it, inserted] = outer_of_.try_emplace({*inner_color, block}, next_outer_);
    if (inserted) ++next_outer_;
    return it->second;
}

std::optional<int> SplitClassesPainter::outer_of(int inner_color, int block) const {
    auto it = outer_of_.find({inner_color, block});
    if (it == outer_of_.end()) return std::nullopt;
    return it->second;
}

RecursivePainter::RecursivePainter(int r, int n, std::vector<RecursiveLevelParams> schedule,
                                   bool validate)
    : r_(r), n_(n), schedule_(std::move(schedule)), validate_(validate) {
    if (r < 2) throw PreconditionError("recursive painter: r must be >= 2");
    if (n < 1) throw PreconditionError("recursive painter: n must be >= 1");
    if (r_ >= 3) {
        witness_ = std::make_unique<WitnessPainter>(n_, pick_t(n_), validate_);
        s_ = pick_s(n_);
    }
}

int RecursivePainter::pick_t(int m) const {
    if (!schedule_.empty() && schedule_[0].t) return *schedule_[0].t;
    return WitnessPainter::default_t(m);
}

int RecursivePainter::pick_s(int m) const {
    if (!schedule_.empty() && schedule_[0].s) return *schedule_[0].s;
    if (m < 16) return 1;
    double value = std::floor(std::log(m) / (8.0 * std::log(std::log(m))));
    return std::max(1, static_cast<int>(value));
}

std::optional<int> RecursivePainter::add_vertex(const VertexSet& neighbors) {
    const int v = vertices_seen_;
    if (!is_canonical_vertex_set(neighbors, v)) {
        throw PreconditionError("recursive painter: bad neighbor list");
    }
    if (r_ == 2) {
        // One color; legal exactly when the stream is edgeless, which is the
        // caller's guarantee (each class is independent or one neighborhood
        // short of a clique bound drop).
        ++vertices_seen_;
        next_color_ = 1;
        return 0;
    }
    std::optional<int> wcolor = witness_->add_vertex(neighbors);
    if (!wcolor) return std::nullopt;
    int block = count_per_witness_color_[*wcolor]++ / s_;
    auto [slot, fresh] = class_of_block_.try_emplace({*wcolor, block},
                                                     static_cast<int>(classes_.size()));
    if (fresh) {
        OuterClass cls;
        std::vector<RecursiveLevelParams> tail(schedule_.begin() + (schedule_.empty() ? 0 : 1),
                                               schedule_.end());
        cls.inner = std::make_unique<RecursivePainter>(r_ - 1, std::max(1, s_), std::move(tail),
                                                       validate_);
        classes_.push_back(std::move(cls));
    }
    OuterClass& cls = classes_[static_cast<std::size_t>(slot->second)];

    // Project the neighborhood onto the class and feed the inner painter.
    VertexSet inner_neighbors;
    for (std::size_t i = 0; i < cls.members.size(); ++i) {
        if (std::binary_search(neighbors.begin(), neighbors.end(), cls.members[i])) {
            inner_neighbors.push_back(static_cast<int>(i));
        }
    }
    std::optional<int> inner_color = cls.inner->add_vertex(inner_neighbors);
    if (!inner_color) return std::nullopt;
    cls.members.push_back(v);

    auto [color_slot, new_color] = cls.global_of_inner.try_emplace(*inner_color, next_color_);
    if (new_color) ++next_color_;
    ++vertices_seen_;
    return color_slot->second;
}

std::optional<int> RecursivePainter::choose_color(const PainterView& view) {
    VertexSet neighbors;
    for (int u : view.revealed.neighbors(view.vertex)) {
        if (u < view.vertex) neighbors.push_back(u);
    }
    std::optional<int> color = add_vertex(neighbors);
    if (!color) {
        throw ProtocolError("recursive painter stuck at round " + std::to_string(view.vertex));
    }
    return color;
}

int RecursivePainter::outer_classes_used() const {
    if (r_ == 2) return next_color_ > 0 ? 1 : 0;
    return static_cast<int>(classes_.size());
}

int RecursivePainter::max_colors_per_class() const {
    int best = 0;
    for (const OuterClass& cls : classes_) {
        best = std::max(best, static_cast<int>(cls.global_of_inner.size()));
    }
    if (r_ == 2) best = std::max(best, next_color_);
    return best;
}

} // namespace colorlab
