#pragma once

#include "curveplan/geometry.hpp"

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace curveplan {

/// How a path point was produced.
enum class StepMode : std::uint8_t {
    Start,  ///< the scenario start point
    Local,  ///< straight step toward the goal
    Global, ///< accepted random sample
    Graph,  ///< node of an RRT tree or PRM roadmap
};

[[nodiscard]] constexpr std::string_view to_string(StepMode m) noexcept {
    switch (m) {
    case StepMode::Start: return "start";
    case StepMode::Local: return "local";
    case StepMode::Global: return "global";
    case StepMode::Graph: return "graph";
    }
    return "?";
}

/// Outcome of one planner run. `modes` is parallel to `path`.
///
/// `nodes_expanded` is the benchmark metric. For DCCPPA it equals
/// committed_nodes + rejected_samples; RRT reports tree size and PRM the full
/// roadmap size, with the breakdown fields kept for diagnostics.
struct PlanResult {
    Path path;
    std::vector<StepMode> modes;
    std::size_t nodes_expanded = 0;
    std::size_t committed_nodes = 0;
    std::size_t rejected_samples = 0;
    std::size_t iterations_used = 0;
    bool succeeded = false;

    friend bool operator==(const PlanResult&, const PlanResult&) = default;

    void push(const Point2& p, StepMode m) {
        path.push_back(p);
        modes.push_back(m);
    }
};

} // namespace curveplan
