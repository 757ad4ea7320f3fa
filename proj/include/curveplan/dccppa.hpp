#pragma once

// Dynamic curvature-constrained path planning.
//
// The planner walks from start toward goal in fixed-size straight steps and
// falls back to rejection sampling whenever the straight step would violate
// the proximity-curvature threshold or hit an obstacle. The curvature metric
// at a point is
//
//     kappa(p) = sum_i 1 / (r_i + d_i)
//
// over all obstacles, with r_i the obstacle radius and d_i the distance from
// p to its center. It grows as the point approaches obstacles, so the
// threshold acts as a soft clearance requirement.

#include "curveplan/geometry.hpp"
#include "curveplan/plan_result.hpp"
#include "curveplan/rng.hpp"
#include "curveplan/scenario.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

namespace curveplan {

/// Floor applied to center distances inside kappa.
inline constexpr double kCenterDistanceFloor = 1e-9;

struct DccppaConfig {
    double beta = 1.0;                ///< weight of curvature deviation in J(p)
    double curvature_threshold = 1.0; ///< admissible upper bound on kappa
    double max_step = 1.0;
    double goal_tolerance = 1.0;
    std::size_t max_iterations = 10'000;
    std::size_t max_global_attempts_per_iteration = 1'000;
    /// Global samples must move strictly closer to the goal.
    bool directional_bias = true;
    /// Fraction of global draws taken on inflated obstacle perimeters.
    double perimeter_bias = 0.0;
    double perimeter_clearance = 0.5;

    friend bool operator==(const DccppaConfig&, const DccppaConfig&) = default;

    void validate() const {
        auto fail = [](const std::string& what) { throw std::invalid_argument("DccppaConfig: " + what); };
        if (!(beta >= 0.0) || !std::isfinite(beta))
            fail("beta must be finite and >= 0");
        if (!(curvature_threshold > 0.0))
            fail("curvature_threshold must be > 0");
        if (!(max_step > 0.0) || !std::isfinite(max_step))
            fail("max_step must be finite and > 0");
        if (!(goal_tolerance > 0.0))
            fail("goal_tolerance must be > 0");
        if (max_iterations == 0)
            fail("max_iterations must be > 0");
        if (max_global_attempts_per_iteration == 0)
            fail("max_global_attempts_per_iteration must be > 0");
        if (!(perimeter_bias >= 0.0 && perimeter_bias <= 1.0))
            fail("perimeter_bias must lie in [0, 1]");
        if (!(perimeter_clearance >= 0.0))
            fail("perimeter_clearance must be >= 0");
    }
};

[[nodiscard]] inline double curvature(const Point2& p, std::span<const Obstacle> obstacles) noexcept {
    double kappa = 0.0;
    for (const auto& o : obstacles)
        kappa += 1.0 / (o.radius + std::max(distance(p, o.center), kCenterDistanceFloor));
    return kappa;
}

[[nodiscard]] inline double path_length(std::span<const Point2> path) noexcept {
    double len = 0.0;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        len += distance(path[i], path[i + 1]);
    return len;
}

/// Sum of kappa over every path point (each point against every obstacle).
[[nodiscard]] inline double curvature_deviation(std::span<const Point2> path,
                                                std::span<const Obstacle> obstacles) noexcept {
    double sum = 0.0;
    for (const auto& p : path)
        sum += curvature(p, obstacles);
    return sum;
}

/// J(p) = length + beta * curvature deviation. Reported as a quality metric;
/// the planner itself never ranks candidates by it.
[[nodiscard]] inline double objective(std::span<const Point2> path, std::span<const Obstacle> obstacles,
                                      double beta) noexcept {
    const double length = path_length(path);
    if (beta == 0.0)
        return length;
    return length + beta * curvature_deviation(path, obstacles);
}

/// One step of at most `max_step` straight toward `goal`; never overshoots.
/// Returns `goal` when already there.
[[nodiscard]] inline Point2 local_step(const Point2& current, const Point2& goal, double max_step) noexcept {
    const double remaining = distance(current, goal);
    if (remaining <= max_step)
        return goal;
    return current + (goal - current) * (max_step / remaining);
}

struct GlobalSample {
    std::optional<Point2> point; ///< empty when the budget ran out
    std::size_t rejected = 0;    ///< draws discarded before acceptance or exhaustion
};

namespace detail {

inline Point2 draw_candidate(const Scenario& s, const DccppaConfig& cfg, Rng& rng) {
    if (cfg.perimeter_bias > 0.0 && !s.obstacles.empty() && rng.bernoulli(cfg.perimeter_bias)) {
        const auto& o = s.obstacles[rng.index(s.obstacles.size())];
        const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const double rho = o.radius + cfg.perimeter_clearance;
        return {o.center.x + rho * std::cos(angle), o.center.y + rho * std::sin(angle)};
    }
    const auto& b = s.bounds;
    return {rng.uniform(b.min_x, b.max_x), rng.uniform(b.min_y, b.max_y)};
}

} // namespace detail

/// Rejection-samples a point in bounds that is outside every obstacle, meets
/// the curvature threshold and (with directional bias) is strictly closer to
/// the goal than `current`. Gives up after `budget` rejected draws.
[[nodiscard]] inline GlobalSample global_sample(const Scenario& scenario, const DccppaConfig& config,
                                                const Point2& current, Rng& rng, std::size_t budget) {
    GlobalSample out;
    const double current_to_goal = distance(current, scenario.goal);
    while (out.rejected < budget) {
        const Point2 p = detail::draw_candidate(scenario, config, rng);
        const bool admissible = scenario.bounds.contains(p) &&
                                (!config.directional_bias || distance(p, scenario.goal) < current_to_goal) &&
                                !point_collides(p, scenario.obstacles) &&
                                curvature(p, scenario.obstacles) <= config.curvature_threshold;
        if (admissible) {
            out.point = p;
            return out;
        }
        ++out.rejected;
    }
    return out;
}

/// Runs the alternating local/global planner. Deterministic in its arguments;
/// failure is reported through `succeeded`, never by throwing.
[[nodiscard]] inline PlanResult plan(const Scenario& scenario, const DccppaConfig& config, RngSeed seed) {
    config.validate();
    const std::span<const Obstacle> obstacles = scenario.obstacles;
    const auto& goal = scenario.goal;

    PlanResult result;
    result.push(scenario.start, StepMode::Start);
    if (curvature(scenario.start, obstacles) > config.curvature_threshold)
        return result;

    Rng rng(seed);
    Point2 current = scenario.start;

    auto finish = [&](std::size_t iterations, bool ok) {
        result.iterations_used = iterations;
        result.succeeded = ok;
        result.nodes_expanded = result.committed_nodes + result.rejected_samples;
        return result;
    };
    auto commit = [&](const Point2& p, StepMode m) {
        result.push(p, m);
        ++result.committed_nodes;
        current = p;
    };

    for (std::size_t it = 0; it < config.max_iterations; ++it) {
        if (distance(current, goal) <= config.goal_tolerance)
            return finish(it, true);

        const Point2 step = local_step(current, goal, config.max_step);
        if (curvature(step, obstacles) <= config.curvature_threshold &&
            !segment_collides({current, step}, obstacles)) {
            commit(step, StepMode::Local);
            continue;
        }

        std::size_t budget = config.max_global_attempts_per_iteration;
        bool committed = false;
        while (budget > 0 && !committed) {
            const auto sample = global_sample(scenario, config, current, rng, budget);
            result.rejected_samples += sample.rejected;
            budget -= sample.rejected;
            if (!sample.point)
                break;
            if (segment_collides({current, *sample.point}, obstacles)) {
                ++result.rejected_samples;
                --budget;
                continue;
            }
            commit(*sample.point, StepMode::Global);
            committed = true;
        }
        if (!committed)
            return finish(it + 1, false);
    }
    return finish(config.max_iterations, distance(current, goal) <= config.goal_tolerance);
}

} // namespace curveplan
