#include "curveplan/scenario.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

using namespace curveplan;

namespace {

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("curveplan_test_" + name);
}

void write_text(const std::filesystem::path& p, const std::string& text) {
    std::ofstream(p) << text;
}

} // namespace

TEST(Rng, EngineMatchesStandardSequence) {
    // The 10000th output of a default-seeded mt19937_64 is fixed by the C++ standard.
    std::mt19937_64 reference;
    reference.discard(9999);
    Rng rng(RngSeed{5489});
    for (int i = 0; i < 9999; ++i)
        rng.next();
    EXPECT_EQ(rng.next(), 9981545732273789042ULL);
    EXPECT_EQ(reference(), 9981545732273789042ULL);
}

TEST(Rng, UniformStaysInRange) {
    Rng rng(RngSeed{3});
    for (int i = 0; i < 100'000; ++i) {
        const double u = rng.uniform01();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        ASSERT_LT(rng.index(7), 7u);
    }
}

TEST(Rng, DerivedSeedsAreDistinctAndStable) {
    const RngSeed base{42};
    EXPECT_EQ(derive_seed(base, 1, 0), derive_seed(base, 1, 0));
    EXPECT_NE(derive_seed(base, 1, 0), derive_seed(base, 1, 1));
    EXPECT_NE(derive_seed(base, 1, 0), derive_seed(base, 2, 0));
    EXPECT_NE(derive_seed(base, 1, 0), derive_seed(RngSeed{43}, 1, 0));
}

TEST(LoadScenario, MinimalFile) {
    const auto path = temp_file("minimal.json");
    write_text(path, R"({"name":"m","bounds":{"min_x":0,"min_y":0,"max_x":100,"max_y":100},
                        "obstacles":[],"start":{"x":5,"y":5},"goal":{"x":95,"y":95}})");
    const Scenario s = load_scenario(path);
    EXPECT_TRUE(s.obstacles.empty());
    EXPECT_EQ(s.start, (Point2{5, 5}));
    EXPECT_EQ(s.goal, (Point2{95, 95}));
}

TEST(LoadScenario, StartInsideObstacleIsRejected) {
    const auto path = temp_file("bad_start.json");
    write_text(path, R"({"name":"b","bounds":{"min_x":0,"min_y":0,"max_x":100,"max_y":100},
                        "obstacles":[{"cx":50,"cy":50,"r":1},{"cx":6,"cy":5,"r":2}],
                        "start":{"x":5,"y":5},"goal":{"x":95,"y":95}})");
    try {
        (void)load_scenario(path);
        FAIL() << "expected ScenarioError";
    } catch (const ScenarioError& e) {
        EXPECT_NE(std::string(e.what()).find("start inside obstacle 1"), std::string::npos) << e.what();
    }
}

TEST(LoadScenario, MalformedAndMissingFields) {
    const auto path = temp_file("malformed.json");
    write_text(path, "{ not json");
    EXPECT_THROW((void)load_scenario(path), ScenarioError);
    write_text(path, R"({"name":"x","bounds":{"min_x":0,"min_y":0,"max_x":1,"max_y":1}})");
    EXPECT_THROW((void)load_scenario(path), ScenarioError);
    EXPECT_THROW((void)load_scenario(temp_file("does_not_exist.json")), ScenarioError);
}

TEST(LoadScenario, InvariantViolations) {
    Scenario s{"v", {0, 0, 10, 10}, {}, {1, 1}, {9, 9}};
    EXPECT_FALSE(find_violation(s));
    auto flat = s;
    flat.bounds.max_y = 0;
    EXPECT_TRUE(find_violation(flat));
    auto outside = s;
    outside.goal = {11, 9};
    EXPECT_TRUE(find_violation(outside));
    auto bad_radius = s;
    bad_radius.obstacles = {{{5, 5}, 0.0}};
    EXPECT_TRUE(find_violation(bad_radius));
    auto far_center = s;
    far_center.obstacles = {{{15, 5}, 1.0}};
    EXPECT_TRUE(find_violation(far_center));
    auto goal_blocked = s;
    goal_blocked.obstacles = {{{9, 8}, 2.0}};
    EXPECT_EQ(find_violation(goal_blocked).value_or(""), "goal inside obstacle 0");
    auto on_boundary = s;
    on_boundary.obstacles = {{{1, 3}, 2.0}};
    EXPECT_FALSE(find_violation(on_boundary));
}

TEST(LoadScenario, ShippedFixtures) {
    const Scenario s1 = load_scenario(std::filesystem::path(CURVEPLAN_FIXTURES) / "scenario1.json");
    EXPECT_EQ(s1.name, "scenario1");
    EXPECT_EQ(s1.obstacles.size(), 6u);
    const Scenario ring = load_scenario(std::filesystem::path(CURVEPLAN_FIXTURES) / "enclosed_goal.json");
    EXPECT_EQ(ring.obstacles.size(), 16u);
}

TEST(SaveScenario, RoundTrips) {
    const auto path = temp_file("roundtrip.json");
    const Scenario empty{"empty", {0, 0, 10, 20}, {}, {1, 1}, {9, 19}};
    save_scenario(empty, path);
    EXPECT_EQ(load_scenario(path), empty);

    const Scenario crowded = generate_scenario({0, 0, 100, 100}, 50, {0.5, 3.0}, RngSeed{8});
    save_scenario(crowded, path);
    const Scenario back = load_scenario(path);
    ASSERT_EQ(back.obstacles.size(), 50u);
    EXPECT_EQ(back, crowded);
}

TEST(GenerateScenario, NoObstacles) {
    const Scenario s = generate_scenario({0, 0, 100, 100}, 0, {1, 2}, RngSeed{1});
    EXPECT_TRUE(s.obstacles.empty());
    EXPECT_EQ(s.start, (Point2{5, 5}));
    EXPECT_EQ(s.goal, (Point2{95, 95}));
}

TEST(GenerateScenario, DeterministicInSeed) {
    const Bounds b{-10, -10, 40, 30};
    EXPECT_EQ(generate_scenario(b, 20, {1, 4}, RngSeed{77}), generate_scenario(b, 20, {1, 4}, RngSeed{77}));
    EXPECT_NE(generate_scenario(b, 20, {1, 4}, RngSeed{77}), generate_scenario(b, 20, {1, 4}, RngSeed{78}));
}

TEST(GenerateScenario, OutputAlwaysValid) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Scenario s = generate_scenario({0, 0, 100, 100}, seed % 30, {2, 12}, RngSeed{seed});
        EXPECT_FALSE(find_violation(s)) << *find_violation(s);
    }
}

TEST(GenerateScenario, CrowdedWorkspaceFails) {
    // A 10x10 box has diagonal ~14.1, so any disc of radius >= 20 centred
    // inside it covers the start: every draw must be rejected.
    EXPECT_THROW((void)generate_scenario({0, 0, 10, 10}, 200, {20, 30}, RngSeed{5}), ScenarioError);
}

TEST(GenerateScenario, RejectsBadArguments) {
    EXPECT_THROW((void)generate_scenario({0, 0, 0, 10}, 1, {1, 2}, RngSeed{}), std::invalid_argument);
    EXPECT_THROW((void)generate_scenario({0, 0, 10, 10}, 1, {0, 2}, RngSeed{}), std::invalid_argument);
    EXPECT_THROW((void)generate_scenario({0, 0, 10, 10}, 1, {3, 2}, RngSeed{}), std::invalid_argument);
}
