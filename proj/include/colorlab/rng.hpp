#ifndef COLORLAB_RNG_HPP
#define COLORLAB_RNG_HPP

#include <cstdint>

namespace colorlab {

// Counter-based randomness. Every random decision in the library is keyed by
// (seed, stream, index) so that the same decision point always sees the same
// draw regardless of how much of the surrounding computation runs. This is
// what turns distributional statements about prefixes into pathwise
// equalities, and it makes Monte-Carlo trials order-independent.

inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

enum class Stream : std::uint64_t {
    inclusion_coin = 1,  // sampler step coins
    subsample_keep = 2,  // vertex-keep coins of the subsampler
    trial = 3,           // per-trial seed derivation
    restart = 4,         // per-restart seed derivation in the peel colorer
    game = 5,            // seeded game strategies
    generator = 6,       // random graph generators
};

inline std::uint64_t substream(std::uint64_t seed, Stream s, std::uint64_t index) {
    return mix64(mix64(seed ^ mix64(static_cast<std::uint64_t>(s))) ^ index);
}

// Uniform in [0, 1), 53 bits.
inline double u01(std::uint64_t seed, Stream s, std::uint64_t index) {
    return static_cast<double>(substream(seed, s, index) >> 11) * 0x1.0p-53;
}

inline std::uint64_t derive_seed(std::uint64_t seed, Stream s, std::uint64_t index) {
    return substream(seed, s, index);
}

// Small stateful helper for places that just need a sequence of draws.
class SplitMix {
public:
    explicit SplitMix(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() { return mix64(state_++); }
    double next_u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    // Uniform integer in [0, bound), bound > 0.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

} // namespace colorlab

#endif
