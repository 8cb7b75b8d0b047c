#pragma once

#include <algorithm>

#include "swarmsim/vec3.hpp"

namespace swarmsim {

/// Axis-aligned box given by two opposite corners (lo <= hi per axis).
struct Aabb {
    Vector3 lo;
    Vector3 hi;

    bool contains(const Vector3& p) const {
        return p.x > lo.x && p.x < hi.x &&
               p.y > lo.y && p.y < hi.y &&
               p.z > lo.z && p.z < hi.z;
    }

    /// Closest point of the closed box to p (p itself when inside).
    Vector3 clamp(const Vector3& p) const {
        return {std::clamp(p.x, lo.x, hi.x),
                std::clamp(p.y, lo.y, hi.y),
                std::clamp(p.z, lo.z, hi.z)};
    }

    /// Closest point on the box surface to p. For interior points this is
    /// the projection onto the nearest face rather than p itself.
    Vector3 closest_surface_point(const Vector3& p) const {
        if (!contains(p)) return clamp(p);
        Vector3 q = p;
        const double dx = std::min(p.x - lo.x, hi.x - p.x);
        const double dy = std::min(p.y - lo.y, hi.y - p.y);
        const double dz = std::min(p.z - lo.z, hi.z - p.z);
        if (dx <= dy && dx <= dz) {
            q.x = (p.x - lo.x < hi.x - p.x) ? lo.x : hi.x;
        } else if (dy <= dz) {
            q.y = (p.y - lo.y < hi.y - p.y) ? lo.y : hi.y;
        } else {
            q.z = (p.z - lo.z < hi.z - p.z) ? lo.z : hi.z;
        }
        return q;
    }

    /// Euclidean distance from p to the box; 0 when p is inside.
    double distance(const Vector3& p) const { return norm(p - clamp(p)); }
};

} // namespace swarmsim
