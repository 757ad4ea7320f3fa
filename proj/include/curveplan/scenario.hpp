#pragma once

#include "curveplan/geometry.hpp"
#include "curveplan/rng.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace curveplan {

/// Raised for malformed scenario files and for scenarios that break an invariant.
class ScenarioError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Bounds {
    double min_x = 0.0;
    double min_y = 0.0;
    double max_x = 100.0;
    double max_y = 100.0;

    friend constexpr bool operator==(const Bounds&, const Bounds&) = default;

    [[nodiscard]] double width() const noexcept { return max_x - min_x; }
    [[nodiscard]] double height() const noexcept { return max_y - min_y; }

    [[nodiscard]] bool contains(const Point2& p) const noexcept {
        return p.x >= min_x && p.x <= max_x && p.y >= min_y && p.y <= max_y;
    }
};

struct Scenario {
    std::string name;
    Bounds bounds;
    std::vector<Obstacle> obstacles;
    Point2 start;
    Point2 goal;

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Describes the first violated invariant, or nullopt if `s` is valid.
[[nodiscard]] inline std::optional<std::string> find_violation(const Scenario& s) {
    const auto& b = s.bounds;
    for (double v : {b.min_x, b.min_y, b.max_x, b.max_y})
        if (!std::isfinite(v))
            return "bounds are not finite";
    if (!(b.width() > 0.0) || !(b.height() > 0.0))
        return "bounds must have positive width and height";
    if (!s.start.finite() || !s.goal.finite())
        return "start/goal coordinates are not finite";
    if (!b.contains(s.start))
        return "start outside bounds";
    if (!b.contains(s.goal))
        return "goal outside bounds";
    for (std::size_t i = 0; i < s.obstacles.size(); ++i) {
        const auto& o = s.obstacles[i];
        const auto id = std::to_string(i);
        if (!o.center.finite() || !std::isfinite(o.radius))
            return "obstacle " + id + " is not finite";
        if (!(o.radius > 0.0))
            return "obstacle " + id + " has non-positive radius";
        if (!b.contains(o.center))
            return "obstacle " + id + " center outside bounds";
        if (point_in_obstacle(s.start, o))
            return "start inside obstacle " + id;
        if (point_in_obstacle(s.goal, o))
            return "goal inside obstacle " + id;
    }
    return std::nullopt;
}

inline void validate(const Scenario& s) {
    if (auto why = find_violation(s))
        throw ScenarioError("invalid scenario '" + s.name + "': " + *why);
}

inline void to_json(nlohmann::json& j, const Point2& p) { j = {{"x", p.x}, {"y", p.y}}; }
inline void from_json(const nlohmann::json& j, Point2& p) {
    j.at("x").get_to(p.x);
    j.at("y").get_to(p.y);
}

inline void to_json(nlohmann::json& j, const Obstacle& o) {
    j = {{"cx", o.center.x}, {"cy", o.center.y}, {"r", o.radius}};
}
inline void from_json(const nlohmann::json& j, Obstacle& o) {
    j.at("cx").get_to(o.center.x);
    j.at("cy").get_to(o.center.y);
    j.at("r").get_to(o.radius);
}

inline void to_json(nlohmann::json& j, const Bounds& b) {
    j = {{"min_x", b.min_x}, {"min_y", b.min_y}, {"max_x", b.max_x}, {"max_y", b.max_y}};
}
inline void from_json(const nlohmann::json& j, Bounds& b) {
    j.at("min_x").get_to(b.min_x);
    j.at("min_y").get_to(b.min_y);
    j.at("max_x").get_to(b.max_x);
    j.at("max_y").get_to(b.max_y);
}

inline void to_json(nlohmann::json& j, const Scenario& s) {
    j = {{"name", s.name},
         {"bounds", s.bounds},
         {"obstacles", s.obstacles},
         {"start", s.start},
         {"goal", s.goal}};
}
inline void from_json(const nlohmann::json& j, Scenario& s) {
    j.at("name").get_to(s.name);
    j.at("bounds").get_to(s.bounds);
    j.at("obstacles").get_to(s.obstacles);
    j.at("start").get_to(s.start);
    j.at("goal").get_to(s.goal);
}

/// Parses and validates a scenario document.
[[nodiscard]] inline Scenario scenario_from_json(const nlohmann::json& j) {
    Scenario s;
    try {
        s = j.get<Scenario>();
    } catch (const nlohmann::json::exception& e) {
        throw ScenarioError(std::string("malformed scenario: ") + e.what());
    }
    validate(s);
    return s;
}

[[nodiscard]] inline Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ScenarioError("cannot open scenario file '" + path.string() + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ScenarioError("cannot parse '" + path.string() + "': " + e.what());
    }
    return scenario_from_json(j);
}

inline void save_scenario(const Scenario& s, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write scenario file '" + path.string() + "'");
    out << nlohmann::json(s).dump(2) << '\n';
    if (!out)
        throw std::runtime_error("failed writing scenario file '" + path.string() + "'");
}

struct RadiusRange {
    double min = 1.0;
    double max = 1.0;
};

/// Random obstacles in `bounds` with start and goal inset 5% from the
/// lower-left and upper-right corners. Obstacles that would swallow start or
/// goal are redrawn, at most `max_attempts_per_obstacle` times each.
[[nodiscard]] inline Scenario generate_scenario(const Bounds& bounds, std::size_t n_obstacles,
                                                RadiusRange radius, RngSeed seed,
                                                std::size_t max_attempts_per_obstacle = 1000) {
    if (!(bounds.width() > 0.0) || !(bounds.height() > 0.0))
        throw std::invalid_argument("generate_scenario: bounds must have positive extent");
    if (!(radius.min > 0.0) || radius.max < radius.min)
        throw std::invalid_argument("generate_scenario: need 0 < min radius <= max radius");

    Scenario s;
    s.name = "generated-" + std::to_string(seed.value);
    s.bounds = bounds;
    s.start = {bounds.min_x + 0.05 * bounds.width(), bounds.min_y + 0.05 * bounds.height()};
    s.goal = {bounds.max_x - 0.05 * bounds.width(), bounds.max_y - 0.05 * bounds.height()};
    s.obstacles.reserve(n_obstacles);

    Rng rng(seed);
    for (std::size_t i = 0; i < n_obstacles; ++i) {
        bool placed = false;
        for (std::size_t attempt = 0; attempt < max_attempts_per_obstacle && !placed; ++attempt) {
            Obstacle o;
            o.center = {rng.uniform(bounds.min_x, bounds.max_x), rng.uniform(bounds.min_y, bounds.max_y)};
            o.radius = radius.min == radius.max ? radius.min : rng.uniform(radius.min, radius.max);
            if (point_in_obstacle(s.start, o) || point_in_obstacle(s.goal, o))
                continue;
            s.obstacles.push_back(o);
            placed = true;
        }
        if (!placed)
            throw ScenarioError("generate_scenario: could not place obstacle " + std::to_string(i) +
                                " after " + std::to_string(max_attempts_per_obstacle) +
                                " attempts (workspace too crowded)");
    }
    validate(s);
    return s;
}

} // namespace curveplan
