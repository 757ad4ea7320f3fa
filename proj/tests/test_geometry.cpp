#include "curveplan/geometry.hpp"
#include "curveplan/rng.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

using namespace curveplan;

using oracles::sample_segment;

TEST(Distance, Examples) {
    EXPECT_DOUBLE_EQ(distance({0, 0}, {3, 4}), 5.0);
    EXPECT_DOUBLE_EQ(distance({1, 1}, {1, 1}), 0.0);
    EXPECT_DOUBLE_EQ(distance({-2, 0}, {2, 0}), 4.0);
}

TEST(Distance, SymmetricAndTriangleInequality) {
    Rng rng(RngSeed{17});
    for (int i = 0; i < 5000; ++i) {
        const Point2 a{rng.uniform(-1e3, 1e3), rng.uniform(-1e3, 1e3)};
        const Point2 b{rng.uniform(-1e3, 1e3), rng.uniform(-1e3, 1e3)};
        const Point2 c{rng.uniform(-1e3, 1e3), rng.uniform(-1e3, 1e3)};
        EXPECT_EQ(distance(a, b), distance(b, a));
        EXPECT_LE(distance(a, c), distance(a, b) + distance(b, c) + 1e-9);
    }
}

TEST(PointInObstacle, BoundaryIsOutside) {
    const Obstacle unit{{0, 0}, 1};
    EXPECT_TRUE(point_in_obstacle({0, 0}, unit));
    EXPECT_FALSE(point_in_obstacle({1, 0}, unit));
    EXPECT_FALSE(point_in_obstacle({5, 5}, unit));
}

TEST(SegmentIntersectsObstacle, Examples) {
    const Obstacle unit{{0, 0}, 1};
    EXPECT_TRUE(segment_intersects_obstacle({{0, -2}, {0, 2}}, unit));
    EXPECT_FALSE(segment_intersects_obstacle({{2, -2}, {2, 2}}, unit));
    EXPECT_TRUE(segment_intersects_obstacle({{-3, 0.5}, {3, 0.5}}, unit));
    // Cross-check the grazing example against the sampling oracle.
    const auto oracle = sample_segment({{-3, 0.5}, {3, 0.5}}, unit);
    EXPECT_TRUE(oracle.hit);
    EXPECT_NEAR(oracle.min_center_distance, 0.5, 1e-3);
}

TEST(SegmentIntersectsObstacle, DegenerateSegmentIsPoint) {
    const Obstacle unit{{0, 0}, 1};
    EXPECT_TRUE(segment_intersects_obstacle({{0.5, 0}, {0.5, 0}}, unit));
    EXPECT_FALSE(segment_intersects_obstacle({{1, 0}, {1, 0}}, unit));
    EXPECT_FALSE(segment_intersects_obstacle({{3, 3}, {3, 3}}, unit));
}

TEST(SegmentIntersectsObstacle, TangentSegmentDoesNotCollide) {
    EXPECT_FALSE(segment_intersects_obstacle({{-3, 1}, {3, 1}}, Obstacle{{0, 0}, 1}));
}

TEST(SegmentIntersectsObstacle, ClampsToEndpoints) {
    // The infinite line passes through the centre but the segment stops short.
    EXPECT_FALSE(segment_intersects_obstacle({{2, 0}, {5, 0}}, Obstacle{{0, 0}, 1}));
}

TEST(SegmentIntersectsObstacle, AgreesWithSamplingOracle) {
    Rng rng(RngSeed{2718});
    int disagreements = 0;
    for (int i = 0; i < 500; ++i) {
        const Segment s{{rng.uniform(-20, 20), rng.uniform(-20, 20)}, {rng.uniform(-20, 20), rng.uniform(-20, 20)}};
        const Obstacle o{{rng.uniform(-20, 20), rng.uniform(-20, 20)}, rng.uniform(0.5, 15)};
        const auto oracle = sample_segment(s, o);
        if (oracle.hit != segment_intersects_obstacle(s, o) &&
            std::abs(oracle.min_center_distance - o.radius) > 1e-9)
            ++disagreements;
    }
    EXPECT_EQ(disagreements, 0);
}

TEST(PathCollides, Examples) {
    const std::vector<Obstacle> unit{{{0, 0}, 1}};
    EXPECT_TRUE(path_collides(std::vector<Point2>{{-5, 0}, {5, 0}}, unit));
    EXPECT_FALSE(path_collides(std::vector<Point2>{{-5, 3}, {5, 3}}, unit));
    EXPECT_FALSE(path_collides(std::vector<Point2>{{0, 0}}, std::vector<Obstacle>{}));
}

TEST(PathCollides, VertexInsideObstacle) {
    EXPECT_TRUE(path_collides(std::vector<Point2>{{0.2, 0.1}}, std::vector<Obstacle>{{{0, 0}, 1}}));
}

TEST(PathCollides, MonotoneInObstacleSet) {
    Rng rng(RngSeed{99});
    for (int i = 0; i < 300; ++i) {
        std::vector<Point2> path;
        for (int k = 0; k < 5; ++k)
            path.push_back({rng.uniform(0, 50), rng.uniform(0, 50)});
        std::vector<Obstacle> obstacles;
        bool collided = false;
        for (int k = 0; k < 6; ++k) {
            obstacles.push_back({{rng.uniform(0, 50), rng.uniform(0, 50)}, rng.uniform(0.5, 6)});
            const bool now = path_collides(path, obstacles);
            EXPECT_TRUE(!collided || now);
            collided = now;
        }
    }
}
