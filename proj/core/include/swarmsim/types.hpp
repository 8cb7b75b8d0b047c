#pragma once

#include <numbers>

#include "swarmsim/aabb.hpp"
#include "swarmsim/vec3.hpp"

namespace swarmsim {

/// Horizontal speeds below this do not update the cached fly direction, and
/// a velocity below it falls back to the cached heading for detection.
inline constexpr double kHeadingSpeedEps = 1e-3;

/// Softening distance for the collision potential; the squared denominator
/// is clamped below by its square.
inline constexpr double kCollisionEps = 1e-3;

enum class ManeuverMode {
    Planar,   ///< avoidance maneuvers rotate in the horizontal plane
    Spatial,  ///< avoidance maneuvers may leave the plane
};

/// Diagonal 3x3 gain matrix stored as its diagonal.
struct Diag3 {
    Vector3 d{1.0, 1.0, 1.0};

    Vector3 apply(const Vector3& v) const { return {d.x * v.x, d.y * v.y, d.z * v.z}; }

    static Diag3 uniform(double s) { return {{s, s, s}}; }
};

struct GainSet {
    Diag3 k_p = Diag3::uniform(3.0);            ///< formation position gain
    Diag3 k_v = Diag3::uniform(5.0);            ///< formation velocity gain
    Diag3 k_c1 = Diag3::uniform(1.0);           ///< collision position gain
    Diag3 k_c2 = Diag3::uniform(1.0);           ///< collision velocity gain
    Diag3 k_shape{{0.1, 0.5, 0.1}};             ///< offset shaping inside the attractive potential
    double k_r = 0.5;                           ///< rotational (escape) gain
    double k_o1 = 5.0;                          ///< attractive-gradient gain
    Diag3 k_o2 = Diag3::uniform(1.0);           ///< obstacle damping gain
};

struct UavParams {
    double r_s = 1.0;                           ///< safety radius, m
    double r_d = 2.0;                           ///< detection radius, m
    double theta_fov = std::numbers::pi / 3.0;  ///< field-of-view half-angle, rad
};

struct UavState {
    Vector3 position;
    Vector3 velocity;
    double heading = 0.0;  ///< cached fly direction, rad; +x when never moved
};

/// Sphere obstacle as seen by the controller.
struct ObstacleView {
    Vector3 center;
    double r_ok = 1.0;  ///< occupancy radius, m
};

using Building = Aabb;

} // namespace swarmsim
