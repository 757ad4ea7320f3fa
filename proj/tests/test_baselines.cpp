#include "curveplan/baselines.hpp"
#include "curveplan/dccppa.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>

using namespace curveplan;

using oracles::brute_shortest;
using oracles::random_roadmap;

TEST(Rrt, GreedyGoalBiasWalksStraight) {
    const Scenario s{"open", {-1, -5, 11, 5}, {}, {0, 0}, {10, 0}};
    RrtConfig cfg;
    cfg.goal_bias = 1.0;
    cfg.step_size = 1.0;
    cfg.goal_tolerance = 0.5;
    const PlanResult r = rrt_plan(s, cfg, RngSeed{4});
    ASSERT_TRUE(r.succeeded);
    EXPECT_EQ(r.nodes_expanded, 10u); // ceil((10 - 0.5) / 1)
    EXPECT_EQ(r.path.size(), 11u);
    EXPECT_EQ(r.path.back(), (Point2{10, 0}));
}

TEST(Rrt, DeterministicTree) {
    const Scenario s = load_scenario(std::filesystem::path(CURVEPLAN_FIXTURES) / "scenario1.json");
    const auto a = rrt_search(s, RrtConfig{}, RngSeed{21});
    const auto b = rrt_search(s, RrtConfig{}, RngSeed{21});
    EXPECT_EQ(a.tree.nodes, b.tree.nodes);
    EXPECT_EQ(a.tree.parent, b.tree.parent);
    EXPECT_EQ(a.result, b.result);
}

TEST(Rrt, TreeInvariants) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Scenario s = generate_scenario({0, 0, 100, 100}, 12, {3, 9}, RngSeed{seed});
        const RrtConfig cfg;
        const auto run = rrt_search(s, cfg, RngSeed{seed});
        ASSERT_EQ(run.tree.nodes.size(), run.tree.parent.size());
        EXPECT_EQ(run.tree.parent[0], kNoParent);
        for (std::size_t i = 1; i < run.tree.nodes.size(); ++i) {
            const auto p = run.tree.parent[i];
            ASSERT_LT(p, i); // parents precede children, so the tree is connected to the root
            EXPECT_LE(distance(run.tree.nodes[p], run.tree.nodes[i]), cfg.step_size + 1e-9);
            EXPECT_FALSE(segment_collides({run.tree.nodes[p], run.tree.nodes[i]}, s.obstacles));
        }
        EXPECT_EQ(run.result.nodes_expanded, run.tree.nodes.size() - 1);
        if (run.result.succeeded) {
            EXPECT_FALSE(path_collides(run.result.path, s.obstacles));
            EXPECT_LE(distance(run.result.path.back(), s.goal), cfg.goal_tolerance);
        }
    }
}

TEST(Rrt, NodeBudgetExhaustion) {
    const Scenario ring = load_scenario(std::filesystem::path(CURVEPLAN_FIXTURES) / "enclosed_goal.json");
    RrtConfig cfg;
    cfg.max_nodes = 500;
    const PlanResult r = rrt_plan(ring, cfg, RngSeed{2});
    EXPECT_FALSE(r.succeeded);
    EXPECT_EQ(r.nodes_expanded, 500u);
}

TEST(Rrt, ConfigValidation) {
    RrtConfig cfg;
    cfg.goal_bias = 1.5;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.step_size = 0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(Prm, OpenFieldPathIsNearlyStraight) {
    const Scenario s{"open", {0, -2, 10, 2}, {}, {0, 0}, {10, 0}};
    PrmConfig cfg;
    cfg.n_samples = 10;
    cfg.k_neighbors = 5;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const PlanResult r = prm_plan(s, cfg, RngSeed{seed});
        ASSERT_TRUE(r.succeeded);
        EXPECT_EQ(r.nodes_expanded, 12u);
        // The path may stop at any roadmap node within the goal tolerance.
        EXPECT_GE(path_length(r.path), 10.0 - cfg.goal_tolerance - 1e-12);
        EXPECT_LE(distance(r.path.back(), s.goal), cfg.goal_tolerance);
        EXPECT_LE(path_length(r.path), 1.2 * 10.0);
    }
}

TEST(Prm, KNeighborsValidation) {
    PrmConfig cfg;
    cfg.k_neighbors = 0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg.k_neighbors = cfg.n_samples;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    const Scenario s{"open", {0, 0, 10, 10}, {}, {1, 1}, {9, 9}};
    cfg.k_neighbors = 0;
    EXPECT_THROW((void)prm_plan(s, cfg, RngSeed{}), std::invalid_argument);
}

TEST(Prm, RoadmapEdgesAreCollisionFree) {
    const Scenario s = load_scenario(std::filesystem::path(CURVEPLAN_FIXTURES) / "scenario1.json");
    const auto run = prm_search(s, PrmConfig{}, RngSeed{8});
    EXPECT_EQ(run.result.nodes_expanded, 302u);
    for (std::size_t i = 0; i < run.roadmap.nodes.size(); ++i) {
        EXPECT_FALSE(point_collides(run.roadmap.nodes[i], s.obstacles));
        for (const auto& e : run.roadmap.adjacency[i])
            EXPECT_FALSE(segment_collides({run.roadmap.nodes[i], run.roadmap.nodes[e.to]}, s.obstacles));
    }
    ASSERT_TRUE(run.result.succeeded);
    EXPECT_FALSE(path_collides(run.result.path, s.obstacles));
    EXPECT_EQ(run.result, prm_search(s, PrmConfig{}, RngSeed{8}).result);
}

TEST(Prm, DisconnectedRoadmapFails) {
    const Scenario ring = load_scenario(std::filesystem::path(CURVEPLAN_FIXTURES) / "enclosed_goal.json");
    const PlanResult r = prm_plan(ring, PrmConfig{}, RngSeed{1});
    EXPECT_FALSE(r.succeeded);
    EXPECT_EQ(r.nodes_expanded, 302u);
}

TEST(ShortestPath, MatchesExhaustiveEnumeration) {
    Rng rng(RngSeed{1234});
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + rng.index(11); // 2..12 nodes
        const Roadmap rm = random_roadmap(rng, n, 0.35);
        const std::size_t target = 1 + rng.index(n - 1);
        const auto fast = shortest_path(rm, 0, target);
        const auto slow = brute_shortest(rm, 0, target);
        ASSERT_EQ(fast.has_value(), slow.has_value());
        if (!fast)
            continue;
        EXPECT_NEAR(fast->cost, *slow, 1e-9);
        EXPECT_EQ(fast->nodes.front(), 0u);
        EXPECT_EQ(fast->nodes.back(), target);
        double walked = 0.0;
        for (std::size_t i = 0; i + 1 < fast->nodes.size(); ++i)
            walked += distance(rm.nodes[fast->nodes[i]], rm.nodes[fast->nodes[i + 1]]);
        EXPECT_NEAR(walked, fast->cost, 1e-9);
    }
}

TEST(ShortestPath, SourceIsTarget) {
    Roadmap rm;
    rm.nodes = {{0, 0}};
    rm.adjacency.assign(1, {});
    const auto p = shortest_path(rm, 0, 0);
    ASSERT_TRUE(p);
    EXPECT_EQ(p->nodes, std::vector<std::size_t>{0});
    EXPECT_EQ(p->cost, 0.0);
}
