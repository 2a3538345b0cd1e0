#ifndef COLORLAB_REPORT_HPP
#define COLORLAB_REPORT_HPP

#include <chrono>

#include <nlohmann/json.hpp>

#include "colorlab/sampler.hpp"

namespace colorlab {

// Reports embed the fully resolved configuration, a version stamp, the seed
// actually used, and per-check verification stamps, so a run is reproducible
// from its report alone.
class Report {
public:
    explicit Report(std::string verb);

    void set_config(nlohmann::ordered_json config);
    void add_result(const std::string& key, nlohmann::ordered_json value);
    // verdict true = check passed.
    void stamp(const std::string& check, bool verdict);

    bool all_verified() const { return all_verified_; }
    // Fills wall_time and serializes.
    std::string to_json() const;

private:
    nlohmann::ordered_json body_;
    bool all_verified_ = true;
    std::chrono::steady_clock::time_point start_;
};

std::string version_string();

nlohmann::ordered_json marginal_report_to_json(const MarginalReport& report);
std::string marginal_report_to_csv(const MarginalReport& report);

} // namespace colorlab

#endif
