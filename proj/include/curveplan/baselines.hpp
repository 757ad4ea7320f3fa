#pragma once

// Reference planners used as comparison targets: a goal-biased RRT and a
// k-nearest PRM with a label-setting shortest-path query. Both report the
// same node-count metric as the curvature-constrained planner.

#include "curveplan/geometry.hpp"
#include "curveplan/plan_result.hpp"
#include "curveplan/rng.hpp"
#include "curveplan/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace curveplan {

struct RrtConfig {
    double step_size = 1.0;
    double goal_bias = 0.05;
    double goal_tolerance = 1.0;
    std::size_t max_nodes = 10'000;
    /// Hard cap on drawn samples, so a tree boxed in by obstacles terminates.
    std::size_t max_samples = 200'000;

    friend bool operator==(const RrtConfig&, const RrtConfig&) = default;

    void validate() const {
        auto fail = [](const std::string& what) { throw std::invalid_argument("RrtConfig: " + what); };
        if (!(step_size > 0.0) || !std::isfinite(step_size))
            fail("step_size must be finite and > 0");
        if (!(goal_bias >= 0.0 && goal_bias <= 1.0))
            fail("goal_bias must lie in [0, 1]");
        if (!(goal_tolerance > 0.0))
            fail("goal_tolerance must be > 0");
        if (max_nodes == 0)
            fail("max_nodes must be > 0");
        if (max_samples == 0)
            fail("max_samples must be > 0");
    }
};

struct PrmConfig {
    std::size_t n_samples = 300;
    std::size_t k_neighbors = 10;
    double goal_tolerance = 1.0;
    /// Collision-free sampling gives up after n_samples * this many draws.
    std::size_t sample_attempt_factor = 100;

    friend bool operator==(const PrmConfig&, const PrmConfig&) = default;

    void validate() const {
        auto fail = [](const std::string& what) { throw std::invalid_argument("PrmConfig: " + what); };
        if (n_samples == 0)
            fail("n_samples must be > 0");
        if (k_neighbors == 0)
            fail("k_neighbors must be > 0");
        if (k_neighbors >= n_samples)
            fail("k_neighbors must be < n_samples");
        if (!(goal_tolerance > 0.0))
            fail("goal_tolerance must be > 0");
        if (sample_attempt_factor == 0)
            fail("sample_attempt_factor must be > 0");
    }
};

inline constexpr std::size_t kNoParent = std::numeric_limits<std::size_t>::max();

/// RRT tree rooted at node 0.
struct Tree {
    std::vector<Point2> nodes;
    std::vector<std::size_t> parent;
};

struct RoadmapEdge {
    std::size_t to = 0;
    double cost = 0.0;
};

/// Undirected graph; every edge appears in both adjacency lists.
struct Roadmap {
    std::vector<Point2> nodes;
    std::vector<std::vector<RoadmapEdge>> adjacency;

    void add_edge(std::size_t a, std::size_t b, double cost) {
        adjacency[a].push_back({b, cost});
        adjacency[b].push_back({a, cost});
    }
};

/// Index of the node closest to `p`; ties go to the lowest index.
[[nodiscard]] inline std::size_t nearest_node(std::span<const Point2> nodes, const Point2& p) {
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double d = distance(nodes[i], p);
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    return best;
}

struct RrtRun {
    Tree tree;
    PlanResult result;
};

[[nodiscard]] inline RrtRun rrt_search(const Scenario& scenario, const RrtConfig& config, RngSeed seed) {
    config.validate();
    RrtRun run;
    auto& tree = run.tree;
    auto& res = run.result;
    tree.nodes.push_back(scenario.start);
    tree.parent.push_back(kNoParent);

    auto extract = [&](std::size_t leaf) {
        std::vector<std::size_t> chain;
        for (std::size_t i = leaf; i != kNoParent; i = tree.parent[i])
            chain.push_back(i);
        std::ranges::reverse(chain);
        for (std::size_t i : chain)
            res.push(tree.nodes[i], i == 0 ? StepMode::Start : StepMode::Graph);
        res.succeeded = true;
    };

    if (distance(scenario.start, scenario.goal) <= config.goal_tolerance) {
        extract(0);
        return run;
    }

    Rng rng(seed);
    const auto& b = scenario.bounds;
    std::size_t samples = 0;
    while (samples < config.max_samples && tree.nodes.size() - 1 < config.max_nodes) {
        ++samples;
        const Point2 target = rng.bernoulli(config.goal_bias)
                                  ? scenario.goal
                                  : Point2{rng.uniform(b.min_x, b.max_x), rng.uniform(b.min_y, b.max_y)};
        const std::size_t near = nearest_node(tree.nodes, target);
        const Point2 from = tree.nodes[near];
        const double d = distance(from, target);
        if (d == 0.0)
            continue;
        const Point2 next = d <= config.step_size ? target : from + (target - from) * (config.step_size / d);
        if (segment_collides({from, next}, scenario.obstacles)) {
            ++res.rejected_samples;
            continue;
        }
        tree.nodes.push_back(next);
        tree.parent.push_back(near);
        if (distance(next, scenario.goal) <= config.goal_tolerance) {
            extract(tree.nodes.size() - 1);
            break;
        }
    }
    res.committed_nodes = tree.nodes.size() - 1;
    res.nodes_expanded = res.committed_nodes;
    res.iterations_used = samples;
    if (!res.succeeded)
        res.push(scenario.start, StepMode::Start);
    return run;
}

[[nodiscard]] inline PlanResult rrt_plan(const Scenario& scenario, const RrtConfig& config, RngSeed seed) {
    return rrt_search(scenario, config, seed).result;
}

struct RoadmapPath {
    std::vector<std::size_t> nodes;
    double cost = 0.0;
};

/// Label-setting shortest path from `source` to the first settled node for
/// which `is_target` holds. The frontier is ordered by (cost, node index).
[[nodiscard]] inline std::optional<RoadmapPath>
shortest_path(const Roadmap& roadmap, std::size_t source, const std::function<bool(std::size_t)>& is_target) {
    const std::size_t n = roadmap.nodes.size();
    std::vector<double> dist(n, std::numeric_limits<double>::infinity());
    std::vector<std::size_t> parent(n, kNoParent);
    std::vector<bool> settled(n, false);
    using Entry = std::pair<double, std::size_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;

    dist[source] = 0.0;
    frontier.emplace(0.0, source);
    while (!frontier.empty()) {
        const auto [d, u] = frontier.top();
        frontier.pop();
        if (settled[u])
            continue;
        settled[u] = true;
        if (is_target(u)) {
            RoadmapPath out;
            out.cost = d;
            for (std::size_t v = u; v != kNoParent; v = parent[v])
                out.nodes.push_back(v);
            std::ranges::reverse(out.nodes);
            return out;
        }
        for (const auto& e : roadmap.adjacency[u]) {
            const double nd = d + e.cost;
            if (!settled[e.to] && nd < dist[e.to]) {
                dist[e.to] = nd;
                parent[e.to] = u;
                frontier.emplace(nd, e.to);
            }
        }
    }
    return std::nullopt;
}

[[nodiscard]] inline std::optional<RoadmapPath> shortest_path(const Roadmap& roadmap, std::size_t source,
                                                              std::size_t target) {
    return shortest_path(roadmap, source, [target](std::size_t v) { return v == target; });
}

struct PrmRun {
    Roadmap roadmap; ///< node 0 is start, node 1 is goal, then samples
    PlanResult result;
};

[[nodiscard]] inline PrmRun prm_search(const Scenario& scenario, const PrmConfig& config, RngSeed seed) {
    config.validate();
    PrmRun run;
    auto& rm = run.roadmap;
    auto& res = run.result;
    const auto& b = scenario.bounds;

    rm.nodes = {scenario.start, scenario.goal};
    Rng rng(seed);
    const std::size_t max_draws = config.n_samples * config.sample_attempt_factor;
    for (std::size_t draws = 0; draws < max_draws && rm.nodes.size() < config.n_samples + 2; ++draws) {
        const Point2 p{rng.uniform(b.min_x, b.max_x), rng.uniform(b.min_y, b.max_y)};
        if (point_collides(p, scenario.obstacles)) {
            ++res.rejected_samples;
            continue;
        }
        rm.nodes.push_back(p);
    }

    const std::size_t n = rm.nodes.size();
    rm.adjacency.assign(n, {});
    const std::size_t k = std::min(config.k_neighbors, n - 1);
    std::vector<std::pair<double, std::size_t>> by_distance;
    by_distance.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        by_distance.clear();
        for (std::size_t j = 0; j < n; ++j)
            if (j != i)
                by_distance.emplace_back(distance(rm.nodes[i], rm.nodes[j]), j);
        std::ranges::partial_sort(by_distance, by_distance.begin() + static_cast<std::ptrdiff_t>(k));
        for (std::size_t r = 0; r < k; ++r) {
            const auto [cost, j] = by_distance[r];
            const auto& adj = rm.adjacency[i];
            if (std::ranges::any_of(adj, [j](const RoadmapEdge& e) { return e.to == j; }))
                continue;
            if (!segment_collides({rm.nodes[i], rm.nodes[j]}, scenario.obstacles))
                rm.add_edge(i, j, cost);
        }
    }

    res.nodes_expanded = n;
    res.committed_nodes = n;
    res.iterations_used = n;
    const auto found = shortest_path(rm, 0, [&](std::size_t v) {
        return distance(rm.nodes[v], scenario.goal) <= config.goal_tolerance;
    });
    if (found) {
        for (std::size_t v : found->nodes)
            res.push(rm.nodes[v], v == 0 ? StepMode::Start : StepMode::Graph);
        res.succeeded = true;
    } else {
        res.push(scenario.start, StepMode::Start);
    }
    return run;
}

[[nodiscard]] inline PlanResult prm_plan(const Scenario& scenario, const PrmConfig& config, RngSeed seed) {
    return prm_search(scenario, config, seed).result;
}

} // namespace curveplan
