#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "swarmsim/types.hpp"

namespace swarmsim {

/// Frozen world snapshot one agent's control is evaluated against. All
/// agents of a tick read the same snapshot, so evaluation order is free.
struct ControlContext {
    std::span<const UavState> states;
    std::span<const Vector3> targets;            ///< coverage target per agent
    Vector3 barrier_velocity;
    std::span<const ObstacleView> obstacles;
    std::span<const Building> buildings;
    ManeuverMode mode = ManeuverMode::Planar;
    bool obstacle_avoidance_enabled = true;
    double u_max = 10.0;                         ///< acceleration norm clamp, m/s^2
};

struct ObstacleTermResult {
    Vector3 u;
    int detected_count = 0;
};

struct ControlBreakdown {
    Vector3 formation;
    Vector3 collision;
    Vector3 obstacle;
    Vector3 total;  ///< formation + collision (+ obstacle), norm-clamped to u_max
    int detected_count = 0;
};

/// Current fly direction: atan2 of the horizontal velocity when the
/// horizontal speed is at least kHeadingSpeedEps, else the cached heading.
double fly_direction(const UavState& state);

/// Indices of agents strictly closer than r_d to agent i, excluding i.
std::vector<std::size_t> neighborhood(std::size_t i, std::span<const UavState> states,
                                      double r_d);

/// -k_p (p - target) - k_v (v - barrier_velocity).
Vector3 formation_term(const UavState& state, const Vector3& target,
                       const Vector3& barrier_velocity, const GainSet& gains);

/// Sum over neighbors j of -k_c1 p_c + k_c2 (v_j - v_i), where
/// p_c = (p_j - p_i) / max((|p_j - p_i| - r_s)^2, eps^2). Repulsive in the
/// position component; pairs at or below r_s are the caller's violation events.
Vector3 collision_term(std::size_t i, std::span<const UavState> states, const GainSet& gains,
                       const UavParams& params);

/// Planar detection: range within r_d + r_ok and bearing within the
/// field-of-view half-angle of fly_dir (wrapped to (-pi, pi]).
bool detect_planar(const Vector3& p, double fly_dir, const ObstacleView& obstacle,
                   const UavParams& params);

/// Spatial detection: range within r_d + r_ok and the angle between the
/// offset and the heading vector within the field-of-view half-angle.
bool detect_spatial(const Vector3& p, const Vector3& heading, const ObstacleView& obstacle,
                    const UavParams& params);

/// Spatial detection with the zero-velocity fallback: heading is the
/// velocity when at least kHeadingSpeedEps, else the cached fly direction.
bool detect_spatial(const UavState& state, const ObstacleView& obstacle,
                    const UavParams& params);

/// Gradient of the attractive obstacle potential, literally
/// (|k_shape (p - o)| - r_a) * (p - o) / |p - o| with r_a = r_d + r_ok;
/// zero when not detected. Throws std::domain_error when detected and p
/// coincides with the obstacle center.
Vector3 grad_attractive(const Vector3& p, const ObstacleView& obstacle, bool detected,
                        const GainSet& gains, const UavParams& params);

/// k_r * rotation_z(alpha) * (p - o) with the offset's z zeroed first, so
/// the output stays in the horizontal plane; zero when not detected.
Vector3 grad_rotational_planar(const Vector3& p, const ObstacleView& obstacle, double alpha,
                               bool detected, const GainSet& gains);

/// k_r * T_rx * T_ry * T_rz * (p - o) with T_rx the identity and T_ry, T_rz
/// the y/z rotations by alpha; zero when not detected.
Vector3 grad_rotational_spatial(const Vector3& p, const ObstacleView& obstacle, double alpha,
                                bool detected, const GainSet& gains);

/// Full avoidance term over sphere obstacles plus per-agent virtual wall
/// obstacles (closest building surface point within r_d, r_ok = 0):
/// -k_o1 * sum(grad_attractive) - sum(grad_rotational) - k_o2 v, the damping
/// applied only while at least one obstacle is detected.
ObstacleTermResult obstacle_term(const UavState& state, std::span<const ObstacleView> obstacles,
                                 std::span<const Building> buildings, const GainSet& gains,
                                 const UavParams& params, ManeuverMode mode);

/// v scaled down to |v| <= max_norm; returned unchanged (bit-exact) when
/// already within the bound.
Vector3 clamp_norm(const Vector3& v, double max_norm);

/// Superposition u = formation + collision (+ obstacle term when enabled),
/// clamped to u_max. Throws std::out_of_range when agent i has no target.
ControlBreakdown total_control(std::size_t i, const ControlContext& ctx, const GainSet& gains,
                               const UavParams& params);

} // namespace swarmsim
