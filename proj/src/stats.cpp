#include "colorlab/stats.hpp"

#include <boost/math/distributions/beta.hpp>

#include "colorlab/errors.hpp"

namespace colorlab {

namespace {

void check(std::int64_t successes, std::int64_t trials, double level) {
    if (trials <= 0 || successes < 0 || successes > trials) {
        throw PreconditionError("clopper_pearson: bad counts");
    }
    if (!(level > 0.5 && level < 1.0)) {
        throw PreconditionError("clopper_pearson: level must be in (0.5, 1)");
    }
}

} // namespace

double clopper_pearson_lower(std::int64_t successes, std::int64_t trials, double level) {
    check(successes, trials, level);
    if (successes == 0) return 0.0;
    boost::math::beta_distribution<double> dist(static_cast<double>(successes),
                                                static_cast<double>(trials - successes + 1));
    return boost::math::quantile(dist, 1.0 - level);
}

double clopper_pearson_upper(std::int64_t successes, std::int64_t trials, double level) {
    check(successes, trials, level);
    if (successes == trials) return 1.0;
    boost::math::beta_distribution<double> dist(static_cast<double>(successes + 1),
                                                static_cast<double>(trials - successes));
    return boost::math::quantile(dist, level);
}

} // namespace colorlab
