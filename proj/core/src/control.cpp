#include "swarmsim/control.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "swarmsim/rotation.hpp"

namespace swarmsim {

namespace {

double wrap_pi(double a) {
    a = std::fmod(a, 2.0 * std::numbers::pi);
    if (a > std::numbers::pi) a -= 2.0 * std::numbers::pi;
    if (a <= -std::numbers::pi) a += 2.0 * std::numbers::pi;
    return a;
}

Vector3 heading_vector(const UavState& state) {
    if (norm(state.velocity) >= kHeadingSpeedEps) return state.velocity;
    return {std::cos(state.heading), std::sin(state.heading), 0.0};
}

} // namespace

double fly_direction(const UavState& state) {
    if (std::hypot(state.velocity.x, state.velocity.y) >= kHeadingSpeedEps) {
        return std::atan2(state.velocity.y, state.velocity.x);
    }
    return state.heading;
}

std::vector<std::size_t> neighborhood(std::size_t i, std::span<const UavState> states,
                                      double r_d) {
    if (i >= states.size()) throw std::out_of_range("neighborhood: agent index out of range");
    std::vector<std::size_t> out;
    const Vector3 p = states[i].position;
    for (std::size_t j = 0; j < states.size(); ++j) {
        if (j == i) continue;
        if (norm(states[j].position - p) < r_d) out.push_back(j);
    }
    return out;
}

Vector3 formation_term(const UavState& state, const Vector3& target,
                       const Vector3& barrier_velocity, const GainSet& gains) {
    return -gains.k_p.apply(state.position - target) -
           gains.k_v.apply(state.velocity - barrier_velocity);
}

Vector3 collision_term(std::size_t i, std::span<const UavState> states, const GainSet& gains,
                       const UavParams& params) {
    Vector3 sum;
    const UavState& self = states[i];
    for (const std::size_t j : neighborhood(i, states, params.r_d)) {
        const Vector3 p_ij = states[j].position - self.position;
        const Vector3 v_ij = states[j].velocity - self.velocity;
        const double gap = norm(p_ij) - params.r_s;
        const double denom = std::max(gap * gap, kCollisionEps * kCollisionEps);
        sum += -gains.k_c1.apply(p_ij * (1.0 / denom)) + gains.k_c2.apply(v_ij);
    }
    return sum;
}

bool detect_planar(const Vector3& p, double fly_dir, const ObstacleView& obstacle,
                   const UavParams& params) {
    const Vector3 offset = obstacle.center - p;
    if (norm(offset) > params.r_d + obstacle.r_ok) return false;
    const double bearing = std::atan2(offset.y, offset.x);
    return std::abs(wrap_pi(bearing - fly_dir)) < params.theta_fov;
}

bool detect_spatial(const Vector3& p, const Vector3& heading, const ObstacleView& obstacle,
                    const UavParams& params) {
    const Vector3 offset = obstacle.center - p;
    const double range = norm(offset);
    if (range > params.r_d + obstacle.r_ok) return false;
    if (range < kZeroVectorEps) return true;  // coincident: direction undefined, range decides
    return angle_between(offset, heading) <= params.theta_fov;
}

bool detect_spatial(const UavState& state, const ObstacleView& obstacle,
                    const UavParams& params) {
    return detect_spatial(state.position, heading_vector(state), obstacle, params);
}

Vector3 grad_attractive(const Vector3& p, const ObstacleView& obstacle, bool detected,
                        const GainSet& gains, const UavParams& params) {
    if (!detected) return {};
    const Vector3 offset = p - obstacle.center;
    const double d = norm(offset);
    if (d < kZeroVectorEps) {
        throw std::domain_error("grad_attractive: agent coincides with obstacle center");
    }
    const double r_a = params.r_d + obstacle.r_ok;
    const double shaped = norm(gains.k_shape.apply(offset));
    return (shaped - r_a) * offset * (1.0 / d);
}

Vector3 grad_rotational_planar(const Vector3& p, const ObstacleView& obstacle, double alpha,
                               bool detected, const GainSet& gains) {
    if (!detected) return {};
    Vector3 offset = p - obstacle.center;
    offset.z = 0.0;
    return gains.k_r * rotation_z(alpha).apply(offset);
}

Vector3 grad_rotational_spatial(const Vector3& p, const ObstacleView& obstacle, double alpha,
                                bool detected, const GainSet& gains) {
    if (!detected) return {};
    const Vector3 offset = p - obstacle.center;
    return gains.k_r * rotation_y(alpha).apply(rotation_z(alpha).apply(offset));
}

ObstacleTermResult obstacle_term(const UavState& state, std::span<const ObstacleView> obstacles,
                                 std::span<const Building> buildings, const GainSet& gains,
                                 const UavParams& params, ManeuverMode mode) {
    ObstacleTermResult res;
    Vector3 attractive_sum;
    Vector3 rotational_sum;

    const double fly_dir = fly_direction(state);
    const Vector3 heading = heading_vector(state);

    auto accumulate = [&](const ObstacleView& ob) {
        const bool detected = mode == ManeuverMode::Planar
                                  ? detect_planar(state.position, fly_dir, ob, params)
                                  : detect_spatial(state.position, heading, ob, params);
        if (!detected) return;
        ++res.detected_count;
        attractive_sum += grad_attractive(state.position, ob, true, gains, params);
        const double alpha = avoidance_angle(norm(state.position - ob.center), params.r_s,
                                             params.r_d);
        rotational_sum += mode == ManeuverMode::Planar
                              ? grad_rotational_planar(state.position, ob, alpha, true, gains)
                              : grad_rotational_spatial(state.position, ob, alpha, true, gains);
    };

    for (const auto& ob : obstacles) accumulate(ob);
    for (const auto& b : buildings) {
        // Walls act through their nearest surface point as zero-radius obstacles.
        if (b.distance(state.position) > params.r_d) continue;
        accumulate(ObstacleView{b.closest_surface_point(state.position), 0.0});
    }

    res.u = -(gains.k_o1 * attractive_sum) - rotational_sum;
    if (res.detected_count > 0) res.u -= gains.k_o2.apply(state.velocity);
    return res;
}

Vector3 clamp_norm(const Vector3& v, double max_norm) {
    const double n2 = norm_sq(v);
    if (n2 <= max_norm * max_norm) return v;
    return v * (max_norm / std::sqrt(n2));
}

ControlBreakdown total_control(std::size_t i, const ControlContext& ctx, const GainSet& gains,
                               const UavParams& params) {
    if (i >= ctx.states.size()) throw std::out_of_range("total_control: agent index out of range");
    if (i >= ctx.targets.size()) {
        throw std::out_of_range("total_control: agent has no coverage target");
    }

    ControlBreakdown out;
    out.formation = formation_term(ctx.states[i], ctx.targets[i], ctx.barrier_velocity, gains);
    out.collision = collision_term(i, ctx.states, gains, params);
    Vector3 u = out.formation + out.collision;
    if (ctx.obstacle_avoidance_enabled) {
        const auto obs = obstacle_term(ctx.states[i], ctx.obstacles, ctx.buildings, gains,
                                       params, ctx.mode);
        out.obstacle = obs.u;
        out.detected_count = obs.detected_count;
        u += obs.u;
    }
    out.total = clamp_norm(u, ctx.u_max);
    return out;
}

} // namespace swarmsim
