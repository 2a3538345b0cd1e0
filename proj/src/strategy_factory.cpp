#include <map>
#include <sstream>

#include "colorlab/builder_force.hpp"
#include "colorlab/game.hpp"
#include "colorlab/recursive_painter.hpp"
#include "colorlab/witness_painter.hpp"

namespace colorlab {

namespace {

struct StrategySpec {
    std::string name;
    std::map<std::string, std::string> options;

    double number(const std::string& key, double fallback) const {
        auto it = options.find(key);
        return it == options.end() ? fallback : std::stod(it->second);
    }
    int integer(const std::string& key, int fallback) const {
        auto it = options.find(key);
        return it == options.end() ? fallback : std::stoi(it->second);
    }
};

StrategySpec parse_spec(const std::string& text) {
    StrategySpec spec;
    auto colon = text.find(':');
    spec.name = text.substr(0, colon);
    if (colon == std::string::npos) return spec;
    std::istringstream rest(text.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw PreconditionError("strategy option '" + item + "' is not key=value");
        }
        spec.options[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return spec;
}

} // namespace

std::unique_ptr<BuilderStrategy> make_builder(const std::string& text, int n, int r,
                                              std::uint64_t seed) {
    (void)n;
    StrategySpec spec = parse_spec(text);
    if (spec.name == "trivial") return std::make_unique<TrivialBuilder>();
    if (spec.name == "path") return std::make_unique<PathBuilder>();
    if (spec.name == "random") {
        return std::make_unique<RandomBuilder>(spec.number("p", 0.3), seed);
    }
    if (spec.name == "force-independent") {
        return std::make_unique<ForceIndependentBuilder>(spec.integer("r", r > 0 ? r : 3),
                                                         spec.integer("y", 4),
                                                         spec.integer("escalate", 0) != 0);
    }
    throw PreconditionError("unknown builder '" + spec.name + "'");
}

std::unique_ptr<PainterStrategy> make_painter(const std::string& text, int n, int palette_size,
                                              std::uint64_t seed) {
    StrategySpec spec = parse_spec(text);
    if (spec.name == "first-fit") return std::make_unique<FirstFitPainter>();
    if (spec.name == "random") return std::make_unique<RandomLegalPainter>(seed);
    if (spec.name == "witness") {
        int t = spec.integer("t", std::min(WitnessPainter::default_t(n), palette_size / 2));
        return std::make_unique<WitnessPainter>(n, std::max(1, t));
    }
    if (spec.name == "recursive") {
        std::vector<RecursiveLevelParams> schedule;
        RecursiveLevelParams top;
        if (spec.options.count("t")) top.t = spec.integer("t", 0);
        if (spec.options.count("s")) top.s = spec.integer("s", 0);
        schedule.push_back(top);
        return std::make_unique<RecursivePainter>(spec.integer("r", 3), n, std::move(schedule));
    }
    throw PreconditionError("unknown painter '" + spec.name + "'");
}

} // namespace colorlab
