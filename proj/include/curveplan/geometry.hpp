#pragma once

// Exact 2D primitives shared by every planner: distances, circle containment
// and closed-segment versus circle intersection. The robot is a point and
// obstacles are open discs, so a point on a boundary is admissible.

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

namespace curveplan {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend constexpr bool operator==(const Point2&, const Point2&) = default;

    constexpr Point2 operator+(const Point2& o) const noexcept { return {x + o.x, y + o.y}; }
    constexpr Point2 operator-(const Point2& o) const noexcept { return {x - o.x, y - o.y}; }
    constexpr Point2 operator*(double s) const noexcept { return {x * s, y * s}; }

    [[nodiscard]] bool finite() const noexcept { return std::isfinite(x) && std::isfinite(y); }
};

/// Circular obstacle. The interior (distance < radius) is forbidden.
struct Obstacle {
    Point2 center;
    double radius = 1.0;

    friend constexpr bool operator==(const Obstacle&, const Obstacle&) = default;
};

/// Straight edge between two path or graph nodes. a == b is a point.
struct Segment {
    Point2 a;
    Point2 b;
};

using Path = std::vector<Point2>;

[[nodiscard]] inline double dot(const Point2& p, const Point2& q) noexcept {
    return p.x * q.x + p.y * q.y;
}

[[nodiscard]] inline double distance(const Point2& p, const Point2& q) noexcept {
    return std::hypot(p.x - q.x, p.y - q.y);
}

[[nodiscard]] inline bool point_in_obstacle(const Point2& p, const Obstacle& o) noexcept {
    return distance(p, o.center) < o.radius;
}

/// Minimum distance from `p` to the closed segment `s`.
[[nodiscard]] inline double distance_to_segment(const Point2& p, const Segment& s) noexcept {
    const Point2 ab = s.b - s.a;
    const double len2 = dot(ab, ab);
    if (len2 == 0.0)
        return distance(p, s.a);
    const double t = std::clamp(dot(p - s.a, ab) / len2, 0.0, 1.0);
    return distance(p, s.a + ab * t);
}

[[nodiscard]] inline bool segment_intersects_obstacle(const Segment& s, const Obstacle& o) noexcept {
    return distance_to_segment(o.center, s) < o.radius;
}

[[nodiscard]] inline bool point_collides(const Point2& p, std::span<const Obstacle> obstacles) noexcept {
    return std::ranges::any_of(obstacles, [&](const Obstacle& o) { return point_in_obstacle(p, o); });
}

[[nodiscard]] inline bool segment_collides(const Segment& s, std::span<const Obstacle> obstacles) noexcept {
    return std::ranges::any_of(obstacles,
                               [&](const Obstacle& o) { return segment_intersects_obstacle(s, o); });
}

/// True iff any vertex lies inside an obstacle or any edge crosses one.
[[nodiscard]] inline bool path_collides(std::span<const Point2> path,
                                        std::span<const Obstacle> obstacles) noexcept {
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (point_collides(path[i], obstacles))
            return true;
        if (i + 1 < path.size() && segment_collides({path[i], path[i + 1]}, obstacles))
            return true;
    }
    return false;
}

} // namespace curveplan
