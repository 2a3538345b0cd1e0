#ifndef COLORLAB_STATS_HPP
#define COLORLAB_STATS_HPP

#include <cstdint>

namespace colorlab {

// One-sided exact (Clopper-Pearson) binomial bounds at the given confidence
// level, e.g. level = 0.99 gives the one-sided 99% bound.
double clopper_pearson_lower(std::int64_t successes, std::int64_t trials, double level);
double clopper_pearson_upper(std::int64_t successes, std::int64_t trials, double level);

} // namespace colorlab

#endif
