#include "colorlab/report.hpp"

#include <chrono>
#include <sstream>

#ifndef COLORLAB_GIT_SHA
#define COLORLAB_GIT_SHA "unknown"
#endif

namespace colorlab {

std::string version_string() { return std::string("colorlab 0.1.0+") + COLORLAB_GIT_SHA; }

Report::Report(std::string verb) : start_(std::chrono::steady_clock::now()) {
    body_["verb"] = std::move(verb);
    body_["version"] = version_string();
    body_["config"] = nlohmann::ordered_json::object();
    body_["results"] = nlohmann::ordered_json::object();
    body_["verification"] = nlohmann::ordered_json::object();
}

void Report::set_config(nlohmann::ordered_json config) { body_["config"] = std::move(config); }

void Report::add_result(const std::string& key, nlohmann::ordered_json value) {
    body_["results"][key] = std::move(value);
}

void Report::stamp(const std::string& check, bool verdict) {
    body_["verification"][check] = verdict ? "pass" : "fail";
    if (!verdict) all_verified_ = false;
}

std::string Report::to_json() const {
    nlohmann::ordered_json out = body_;
    auto elapsed = std::chrono::steady_clock::now() - start_;
    out["wall_time_s"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count() / 1000.0;
    out["all_verified"] = all_verified_;
    return out.dump(2) + "\n";
}

nlohmann::ordered_json marginal_report_to_json(const MarginalReport& report) {
    nlohmann::ordered_json j;
    j["trials"] = report.trials;
    j["threshold"] = report.threshold;
    j["confidence"] = report.confidence;
    j["guarantee"] = {{"alpha_in_range", report.flags.alpha_in_range},
                      {"cap_enabled", report.flags.cap_enabled},
                      {"triangle_free", report.flags.triangle_free},
                      {"in_regime", report.flags.in_guarantee_regime()}};
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t v = 0; v < report.frequency.size(); ++v) {
        rows.push_back({{"vertex", v},
                        {"hits", report.hits[v]},
                        {"frequency", report.frequency[v]},
                        {"lower", report.lower[v]},
                        {"upper", report.upper[v]},
                        {"violation", static_cast<bool>(report.violation[v])}});
    }
    j["marginals"] = std::move(rows);
    return j;
}

std::string marginal_report_to_csv(const MarginalReport& report) {
    std::ostringstream out;
    out << "vertex,hits,frequency,lower,upper,violation\n";
    for (std::size_t v = 0; v < report.frequency.size(); ++v) {
        out << v << "," << report.hits[v] << "," << report.frequency[v] << ","
            << report.lower[v] << "," << report.upper[v] << ","
            << (report.violation[v] ? 1 : 0) << "\n";
    }
    return out.str();
}

} // namespace colorlab
