#pragma once

// JSON mappings for planner configs and plan results. Config readers accept
// partial objects: missing keys keep the value already held, so a config file
// can be layered over defaults.

#include "curveplan/baselines.hpp"
#include "curveplan/dccppa.hpp"
#include "curveplan/plan_result.hpp"
#include "curveplan/scenario.hpp"

#include <json.hpp>

#include <cctype>
#include <stdexcept>
#include <string>

namespace curveplan {

enum class Planner : std::uint8_t { Dccppa, Rrt, Prm };

inline constexpr Planner kAllPlanners[] = {Planner::Dccppa, Planner::Rrt, Planner::Prm};

[[nodiscard]] constexpr std::string_view to_string(Planner p) noexcept {
    switch (p) {
    case Planner::Dccppa: return "DCCPPA";
    case Planner::Rrt: return "RRT";
    case Planner::Prm: return "PRM";
    }
    return "?";
}

/// Accepts the display name or its lowercase form.
[[nodiscard]] inline std::optional<Planner> parse_planner(std::string_view name) {
    for (Planner p : kAllPlanners) {
        const auto canon = to_string(p);
        if (name.size() != canon.size())
            continue;
        bool same = true;
        for (std::size_t i = 0; i < name.size(); ++i)
            same = same && std::toupper(static_cast<unsigned char>(name[i])) == canon[i];
        if (same)
            return p;
    }
    return std::nullopt;
}

struct PlannerConfigs {
    DccppaConfig dccppa;
    RrtConfig rrt;
    PrmConfig prm;

    friend bool operator==(const PlannerConfigs&, const PlannerConfigs&) = default;

    void validate() const {
        dccppa.validate();
        rrt.validate();
        prm.validate();
    }
};

namespace detail {
template <typename T>
void read_if_present(const nlohmann::json& j, const char* key, T& field) {
    if (auto it = j.find(key); it != j.end())
        it->get_to(field);
}
} // namespace detail

inline void to_json(nlohmann::json& j, const DccppaConfig& c) {
    j = {{"beta", c.beta},
         {"curvature_threshold", c.curvature_threshold},
         {"max_step", c.max_step},
         {"goal_tolerance", c.goal_tolerance},
         {"max_iterations", c.max_iterations},
         {"max_global_attempts_per_iteration", c.max_global_attempts_per_iteration},
         {"directional_bias", c.directional_bias},
         {"perimeter_bias", c.perimeter_bias},
         {"perimeter_clearance", c.perimeter_clearance}};
}
inline void from_json(const nlohmann::json& j, DccppaConfig& c) {
    using detail::read_if_present;
    read_if_present(j, "beta", c.beta);
    read_if_present(j, "curvature_threshold", c.curvature_threshold);
    read_if_present(j, "max_step", c.max_step);
    read_if_present(j, "goal_tolerance", c.goal_tolerance);
    read_if_present(j, "max_iterations", c.max_iterations);
    read_if_present(j, "max_global_attempts_per_iteration", c.max_global_attempts_per_iteration);
    read_if_present(j, "directional_bias", c.directional_bias);
    read_if_present(j, "perimeter_bias", c.perimeter_bias);
    read_if_present(j, "perimeter_clearance", c.perimeter_clearance);
}

inline void to_json(nlohmann::json& j, const RrtConfig& c) {
    j = {{"step_size", c.step_size},
         {"goal_bias", c.goal_bias},
         {"goal_tolerance", c.goal_tolerance},
         {"max_nodes", c.max_nodes},
         {"max_samples", c.max_samples}};
}
inline void from_json(const nlohmann::json& j, RrtConfig& c) {
    using detail::read_if_present;
    read_if_present(j, "step_size", c.step_size);
    read_if_present(j, "goal_bias", c.goal_bias);
    read_if_present(j, "goal_tolerance", c.goal_tolerance);
    read_if_present(j, "max_nodes", c.max_nodes);
    read_if_present(j, "max_samples", c.max_samples);
}

inline void to_json(nlohmann::json& j, const PrmConfig& c) {
    j = {{"n_samples", c.n_samples},
         {"k_neighbors", c.k_neighbors},
         {"goal_tolerance", c.goal_tolerance},
         {"sample_attempt_factor", c.sample_attempt_factor}};
}
inline void from_json(const nlohmann::json& j, PrmConfig& c) {
    using detail::read_if_present;
    read_if_present(j, "n_samples", c.n_samples);
    read_if_present(j, "k_neighbors", c.k_neighbors);
    read_if_present(j, "goal_tolerance", c.goal_tolerance);
    read_if_present(j, "sample_attempt_factor", c.sample_attempt_factor);
}

inline void to_json(nlohmann::json& j, const PlannerConfigs& c) {
    j = {{"dccppa", c.dccppa}, {"rrt", c.rrt}, {"prm", c.prm}};
}
inline void from_json(const nlohmann::json& j, PlannerConfigs& c) {
    detail::read_if_present(j, "dccppa", c.dccppa);
    detail::read_if_present(j, "rrt", c.rrt);
    detail::read_if_present(j, "prm", c.prm);
}

/// Plan result plus the derived metrics reported alongside it.
[[nodiscard]] inline nlohmann::json plan_result_json(Planner planner, const Scenario& scenario,
                                                     const PlanResult& r, double beta, RngSeed seed) {
    nlohmann::json path = nlohmann::json::array();
    for (std::size_t i = 0; i < r.path.size(); ++i)
        path.push_back({{"x", r.path[i].x}, {"y", r.path[i].y}, {"mode", to_string(r.modes[i])}});
    return {{"planner", to_string(planner)},
            {"scenario", scenario.name},
            {"seed", seed.value},
            {"rng", kRngAlgorithm},
            {"succeeded", r.succeeded},
            {"nodes_expanded", r.nodes_expanded},
            {"committed_nodes", r.committed_nodes},
            {"rejected_samples", r.rejected_samples},
            {"iterations_used", r.iterations_used},
            {"path_length", path_length(r.path)},
            {"objective", objective(r.path, scenario.obstacles, beta)},
            {"path", std::move(path)}};
}

/// Labelled path as read back from a plan result document.
struct LabelledPath {
    std::string label;
    Path path;
};

[[nodiscard]] inline LabelledPath labelled_path_from_json(const nlohmann::json& j) {
    LabelledPath out;
    out.label = j.value("planner", std::string("path"));
    for (const auto& p : j.at("path"))
        out.path.push_back({p.at("x").get<double>(), p.at("y").get<double>()});
    return out;
}

} // namespace curveplan
