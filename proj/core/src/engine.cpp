#include "swarmsim/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "swarmsim/rng.hpp"

namespace swarmsim {

namespace {

Vector3 lerp(const Vector3& a, const Vector3& b, double t) { return a + (b - a) * t; }

std::vector<ObstacleView> obstacle_views(const std::vector<MovingObstacle>& obstacles) {
    std::vector<ObstacleView> views;
    views.reserve(obstacles.size());
    for (const auto& o : obstacles) views.push_back(o.view);
    return views;
}

/// Agents in index order claim the nearest unclaimed point; ties keep the
/// lowest point index.
std::vector<Vector3> match_targets(const std::vector<UavState>& agents,
                                   const std::vector<Vector3>& points) {
    std::vector<Vector3> out(agents.size());
    std::vector<bool> used(points.size(), false);
    for (std::size_t i = 0; i < agents.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t arg = 0;
        for (std::size_t t = 0; t < points.size(); ++t) {
            if (used[t]) continue;
            const double d2 = norm_sq(points[t] - agents[i].position);
            if (d2 < best) {
                best = d2;
                arg = t;
            }
        }
        used[arg] = true;
        out[i] = points[arg];
    }
    return out;
}

void scan_safety_violations(const WorldState& world, double r_s, TrajectoryLog& log) {
    for (std::size_t i = 0; i < world.agents.size(); ++i) {
        for (std::size_t j = i + 1; j < world.agents.size(); ++j) {
            const double d = norm(world.agents[i].position - world.agents[j].position);
            if (d <= r_s) {
                log.events.push_back({world.tick, EventKind::SafetyViolation,
                                      static_cast<std::int64_t>(i),
                                      static_cast<std::int64_t>(j)});
            }
        }
    }
}

void append_record(const WorldState& world, const std::vector<ControlBreakdown>& controls,
                   TrajectoryLog& log) {
    TickRecord rec;
    rec.tick = world.tick;
    rec.time = world.time;
    rec.phase = world.phase;
    rec.agents.reserve(world.agents.size());
    for (std::size_t i = 0; i < world.agents.size(); ++i) {
        AgentRecord a;
        a.position = world.agents[i].position;
        a.velocity = world.agents[i].velocity;
        if (i < controls.size()) {
            a.control = controls[i].total;
            a.detected_count = controls[i].detected_count;
        }
        rec.agents.push_back(a);
    }
    log.records.push_back(std::move(rec));
}

} // namespace

const char* phase_name(Phase p) {
    switch (p) {
        case Phase::Deploy: return "deploy";
        case Phase::Corridor: return "corridor";
        case Phase::Recover: return "recover";
    }
    return "deploy";
}

Phase phase_from_name(const std::string& name) {
    if (name == "deploy") return Phase::Deploy;
    if (name == "corridor") return Phase::Corridor;
    if (name == "recover") return Phase::Recover;
    throw std::invalid_argument("unknown phase name: " + name);
}

SimulationAbort::SimulationAbort(std::int64_t tick_, std::size_t agent_)
    : std::runtime_error("simulation aborted: non-finite state for agent " +
                         std::to_string(agent_) + " at tick " + std::to_string(tick_)),
      tick(tick_), agent(agent_) {}

SimParams sim_params_from(const ScenarioSpec& spec) {
    SimParams p;
    p.dt = spec.dt;
    p.gains = spec.gains;
    p.uav = spec.uav;
    p.mode = spec.mode;
    p.obstacle_avoidance_enabled = spec.obstacle_avoidance_enabled;
    p.u_max = spec.u_max;
    p.retarget_interval = spec.retarget_interval;
    p.lloyd = spec.lloyd;
    p.lloyd.count = spec.agents;
    return p;
}

void integrate_step(UavState& state, const Vector3& accel, double dt) {
    state.position += state.velocity * dt;
    state.velocity += accel * dt;
    if (std::hypot(state.velocity.x, state.velocity.y) >= kHeadingSpeedEps) {
        state.heading = std::atan2(state.velocity.y, state.velocity.x);
    }
}

void update_obstacles(std::vector<MovingObstacle>& obstacles, double t, double dt) {
    for (auto& o : obstacles) {
        if (t >= o.activation_time) o.view.center += o.velocity * dt;
    }
}

BarrierRegion barrier_at(const WorldState& world, double t) {
    BarrierRegion b = world.barrier;
    b.center = world.barrier_initial_center + b.velocity * t;
    const Vector3 profile = world.phase == Phase::Corridor ? world.corridor_half_extents
                                                           : world.deploy_half_extents;
    double progress = 1.0;
    if (world.transition_window > 0.0) {
        progress = std::clamp((t - world.phase_start_time) / world.transition_window, 0.0, 1.0);
    }
    b.half_extents = lerp(world.half_extents_at_phase_start, profile, progress);
    return b;
}

bool update_phase(WorldState& world, const UavParams& uav) {
    if (world.buildings.empty()) return false;

    Phase next = world.phase;
    if (world.phase == Phase::Deploy) {
        for (const auto& agent : world.agents) {
            for (const auto& b : world.buildings) {
                if (b.distance(agent.position) < uav.r_d) {
                    next = Phase::Corridor;
                    break;
                }
            }
            if (next != world.phase) break;
        }
    } else if (world.phase == Phase::Corridor) {
        double max_x = -std::numeric_limits<double>::infinity();
        for (const auto& b : world.buildings) max_x = std::max(max_x, b.hi.x);
        if (world.barrier.center.x - world.barrier.half_extents.x > max_x + uav.r_d) {
            next = Phase::Recover;
        }
    }

    if (next == world.phase) return false;
    world.phase = next;
    world.phase_start_time = world.time;
    world.half_extents_at_phase_start = world.barrier.half_extents;
    return true;
}

void refresh_cvt_targets(WorldState& world, const LloydConfig& lloyd, std::mt19937_64& rng,
                         bool cold_start) {
    LloydConfig cfg = lloyd;
    cfg.count = world.agents.size();

    const bool cold = cold_start || world.targets.size() != world.agents.size();
    std::vector<Vector3> init;
    if (cold) {
        init = sample_region(world.barrier, DensityField::uniform(), cfg.count, rng);
    } else {
        init = world.targets;  // projected into the region by lloyd_run
    }
    auto result = lloyd_run(world.barrier, DensityField::uniform(), cfg, std::move(init), rng);
    if (cold) {
        // Fresh points carry no ownership yet; hand them out greedily.
        world.targets = match_targets(world.agents, result.points);
    } else {
        // Warm refreshes preserve point identity through lloyd_run, so slot i
        // is still agent i's target. Re-matching here would let two nearly
        // equidistant agents swap claims between refreshes and charge through
        // each other head-on.
        world.targets = std::move(result.points);
    }
}

void step_world(WorldState& world, const SimParams& params, std::mt19937_64& lloyd_rng,
                TrajectoryLog& log) {
    const double t_next = world.time + params.dt;

    const bool phase_changed = update_phase(world, params.uav);
    if (phase_changed) {
        log.events.push_back({world.tick + 1, EventKind::PhaseChange,
                              static_cast<std::int64_t>(world.phase), -1});
    }

    world.barrier = barrier_at(world, t_next);
    update_obstacles(world.obstacles, world.time, params.dt);

    if (phase_changed || t_next - world.last_refresh_time >= params.retarget_interval - 1e-9) {
        // Always warm-started here: carrying the current targets into the
        // (possibly morphing) region keeps the agent-to-target assignment
        // stable, so a phase change never scrambles the fleet into head-on
        // crossings. Cold starts are reserved for world construction.
        refresh_cvt_targets(world, params.lloyd, lloyd_rng, false);
        world.last_refresh_time = t_next;
    } else {
        for (auto& target : world.targets) target += world.barrier.velocity * params.dt;
    }

    const auto views = obstacle_views(world.obstacles);
    ControlContext ctx;
    ctx.states = world.agents;
    ctx.targets = world.targets;
    ctx.barrier_velocity = world.barrier.velocity;
    ctx.obstacles = views;
    ctx.buildings = world.buildings;
    ctx.mode = params.mode;
    ctx.obstacle_avoidance_enabled = params.obstacle_avoidance_enabled;
    ctx.u_max = params.u_max;

    std::vector<ControlBreakdown> controls;
    controls.reserve(world.agents.size());
    for (std::size_t i = 0; i < world.agents.size(); ++i) {
        controls.push_back(total_control(i, ctx, params.gains, params.uav));
    }

    for (std::size_t i = 0; i < world.agents.size(); ++i) {
        integrate_step(world.agents[i], controls[i].total, params.dt);
        if (!is_finite(world.agents[i].position) || !is_finite(world.agents[i].velocity)) {
            throw SimulationAbort(world.tick + 1, i);
        }
    }

    world.time = t_next;
    world.tick += 1;

    scan_safety_violations(world, params.uav.r_s, log);
    append_record(world, controls, log);
}

WorldState init_world(const ScenarioSpec& spec, std::uint64_t seed, std::mt19937_64& lloyd_rng) {
    WorldState w;
    w.barrier = spec.barrier;
    w.barrier_initial_center = spec.barrier.center;
    w.deploy_half_extents = spec.barrier.half_extents;
    w.corridor_half_extents = spec.corridor_half_extents;
    w.transition_window = spec.transition_window;
    w.half_extents_at_phase_start = spec.barrier.half_extents;
    w.buildings = spec.buildings;
    for (const auto& o : spec.obstacles) {
        w.obstacles.push_back({{o.center, o.r_ok}, o.velocity, o.activation_time});
    }

    std::vector<Vector3> starts;
    if (spec.initial_positions) {
        starts = *spec.initial_positions;
    } else {
        std::mt19937_64 placement(derive_seed(seed, 0));
        starts = initial_positions(spec.agents, placement);
    }
    w.agents.resize(spec.agents);
    for (std::size_t i = 0; i < spec.agents; ++i) w.agents[i].position = starts[i];

    LloydConfig cfg = spec.lloyd;
    cfg.count = spec.agents;
    refresh_cvt_targets(w, cfg, lloyd_rng, true);
    return w;
}

TrajectoryLog run_simulation(const ScenarioSpec& spec, std::uint64_t seed) {
    auto violations = spec.validate();
    if (!violations.empty()) throw ValidationError(std::move(violations));

    std::mt19937_64 lloyd_rng(derive_seed(seed, 1));
    WorldState world = init_world(spec, seed, lloyd_rng);
    const SimParams params = sim_params_from(spec);

    TrajectoryLog log;
    log.agent_count = spec.agents;
    log.dt = spec.dt;

    scan_safety_violations(world, spec.uav.r_s, log);
    append_record(world, {}, log);

    const auto steps = static_cast<std::int64_t>(std::floor(spec.duration / spec.dt + 1e-9));
    for (std::int64_t k = 0; k < steps; ++k) {
        step_world(world, params, lloyd_rng, log);
    }
    return log;
}

} // namespace swarmsim
