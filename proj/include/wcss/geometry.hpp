#pragma once

#include <cmath>
#include <vector>

#include "wcss/errors.hpp"

namespace wcss {

struct Point3 {
    double x = 0.0, y = 0.0, z = 0.0;
    bool operator==(const Point3&) const = default;
};

inline Point3 operator+(Point3 a, Point3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Point3 operator-(Point3 a, Point3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Point3 operator*(double s, Point3 p) { return {s * p.x, s * p.y, s * p.z}; }
inline double dot(Point3 a, Point3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Point3 cross(Point3 a, Point3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Point3 p) { return std::sqrt(dot(p, p)); }

// Spherical direction of a target as seen by the array: theta is the polar
// angle off boresight, phi the azimuth around it, r the slant range.
struct Direction {
    double theta; // [0, pi]
    double phi;   // (-pi, pi]
    double r;     // > 0
};

// Orthonormal array frame built from the boresight vector.  The local x-axis
// is the projection of global +x onto the plane normal to boresight (global
// +y if boresight is parallel to x), and y completes a right-handed triad.
// With the default straight-down boresight this gives local axes
// (1,0,0), (0,-1,0), (0,0,-1).
struct ArrayFrame {
    Point3 ex, ey, ez;

    static ArrayFrame from_boresight(Point3 boresight) {
        const double n = norm(boresight);
        if (!(n > 0.0))
            throw domain_error("array boresight must be a nonzero vector");
        const Point3 ez = (1.0 / n) * boresight;
        Point3 ref{1.0, 0.0, 0.0};
        if (std::fabs(dot(ref, ez)) > 1.0 - 1e-9)
            ref = {0.0, 1.0, 0.0};
        Point3 ex = ref - dot(ref, ez) * ez;
        ex = (1.0 / norm(ex)) * ex;
        const Point3 ey = cross(ez, ex);
        return {ex, ey, ez};
    }
};

inline Direction angles_in_frame(const ArrayFrame& f, Point3 origin, Point3 target) {
    const Point3 d = target - origin;
    const double r = norm(d);
    if (!(r > 0.0))
        throw domain_error("angles_to: target coincides with the array origin");
    const double lx = dot(d, f.ex);
    const double ly = dot(d, f.ey);
    const double lz = dot(d, f.ez);
    const double s = std::hypot(lx, ly);
    return {std::atan2(s, lz), std::atan2(ly, lx), r};
}

// Piecewise-linear path traversed at constant speed; a single waypoint is a
// static position and the path clamps at its final waypoint.
struct Trajectory {
    std::vector<Point3> waypoints;
    double speed = 0.0; // m/s, required positive when there are >= 2 waypoints

    bool operator==(const Trajectory&) const = default;
};

inline Point3 position_at(const Trajectory& tr, double t) {
    if (tr.waypoints.empty())
        throw domain_error("trajectory has no waypoints");
    if (!(t >= 0.0))
        throw domain_error("trajectory time must be >= 0");
    if (tr.waypoints.size() == 1)
        return tr.waypoints.front();
    if (!(tr.speed > 0.0))
        throw domain_error("moving trajectory needs speed > 0");

    double remaining = tr.speed * t;
    for (std::size_t i = 0; i + 1 < tr.waypoints.size(); ++i) {
        const Point3 a = tr.waypoints[i];
        const Point3 b = tr.waypoints[i + 1];
        const double len = norm(b - a);
        if (remaining <= len) {
            if (len == 0.0)
                continue;
            return a + (remaining / len) * (b - a);
        }
        remaining -= len;
    }
    return tr.waypoints.back();
}

} // namespace wcss
