#ifndef COLORLAB_SAMPLER_HPP
#define COLORLAB_SAMPLER_HPP

#include <cstdint>

#include "colorlab/graph.hpp"

namespace colorlab {

// Parameters of the capped random weight process. The guarantee regime for
// marginal lower bounds is 0 < alpha < log(d)/(4d) on triangle-free input
// with the cap enabled; out-of-range parameters run normally but are flagged,
// never clamped.
struct SamplerParams {
    double alpha = 0.05;
    double d = 1.0;
    bool cap_enabled = true;
    std::uint64_t seed = 0;

    double cap() const;  // alpha * e^{2 alpha d}
};

struct GuaranteeFlags {
    bool alpha_in_range = false;
    bool cap_enabled = false;
    bool triangle_free = false;
    bool in_guarantee_regime() const { return alpha_in_range && cap_enabled && triangle_free; }
};

GuaranteeFlags guarantee_flags(const OrderedGraph& og, const SamplerParams& params);

// The weight process, exposed step by step so tests can watch the state.
// Position i draws its inclusion coin from the substream keyed by
// (seed, i); nothing else consumes randomness. That keying makes the
// distribution of I restricted to a prefix a pathwise function of the
// ordered prefix alone.
class WeightProcess {
public:
    WeightProcess(const OrderedGraph& og, const SamplerParams& params);

    // Runs one step (cap check, inclusion coin, right-neighbor updates).
    void advance();
    bool done() const { return step_ == og_->vertex_count(); }
    int step() const { return step_; }

    // Weight of a vertex id right now.
    double weight(int v) const { return weights_[v]; }
    const std::vector<double>& weights() const { return weights_; }
    const VertexSet& chosen() const { return chosen_sorted_; }

private:
    const OrderedGraph* og_;
    SamplerParams params_;
    std::vector<double> weights_;
    VertexSet chosen_sorted_;
    int step_ = 0;
};

// Runs the process to completion and returns the independent set.
// Throws PreconditionError if some left-neighborhood exceeds params.d.
VertexSet sample_capped(const OrderedGraph& og, const SamplerParams& params);

// Monte-Carlo estimate of the per-vertex inclusion marginals with exact
// one-sided Clopper-Pearson bounds at `confidence` per side.
struct MarginalReport {
    std::int64_t trials = 0;
    double threshold = 0.0;  // guaranteed lower bound on each marginal
    double confidence = 0.99;
    GuaranteeFlags flags;
    std::vector<std::int64_t> hits;   // per vertex id
    std::vector<double> frequency;    // hits / trials
    std::vector<double> lower;        // one-sided lower confidence bound
    std::vector<double> upper;        // one-sided upper confidence bound
    std::vector<bool> violation;      // upper < threshold (confident violation)
};

MarginalReport estimate_marginals(const OrderedGraph& og, const SamplerParams& params,
                                  std::int64_t trials, double confidence = 0.99, int jobs = 1);

// The shadow process: left-neighbors of the vertex at `position` always take
// the "not included" branch; everything else is unchanged and shares the main
// process's coin streams. Returns the weights after step position-1 together
// with X, the total weight then sitting on that left-neighborhood.
struct ShadowResult {
    std::vector<double> weights;  // per vertex id, state after step position-1
    double x_total = 0.0;
};

ShadowResult shadow_weights(const OrderedGraph& og, const SamplerParams& params, int position);

// One round of the sparse-neighborhood reduction: keep each vertex with
// probability p = sqrt(f)/(2d), then retain the kept vertices whose kept
// left-neighborhood is small (<= sqrt(f)) and independent. The induced
// ordered graph is triangle-free with left-degree <= sqrt(f); both are
// re-checked and a failure is an internal error.
struct SubsampleResult {
    OrderedGraph graph;     // induced ordered subgraph, d' = sqrt(f), no f
    VertexSet kept;         // original vertex ids, sorted (kept[i] is vertex i)
};

SubsampleResult subsample_sparse(const OrderedGraph& og, std::uint64_t seed);

// Composition of subsample_sparse and sample_capped with alpha and
// d' = sqrt(f). The returned set is independent in the original graph.
// Guarantee regime: 0 < alpha < log(f)/(8 sqrt(f)).
VertexSet sample_sparse(const OrderedGraph& og, double alpha, std::uint64_t seed);

MarginalReport estimate_marginals_sparse(const OrderedGraph& og, double alpha, std::uint64_t seed,
                                         std::int64_t trials, double confidence = 0.99,
                                         int jobs = 1);

} // namespace colorlab

#endif
