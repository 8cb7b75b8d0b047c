#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

#include "swarmsim/control.hpp"
#include "swarmsim/scenario.hpp"
#include "swarmsim/world.hpp"

namespace swarmsim {

/// Raised when an agent state stops being finite; carries where.
struct SimulationAbort : std::runtime_error {
    std::int64_t tick;
    std::size_t agent;
    SimulationAbort(std::int64_t tick_, std::size_t agent_);
};

/// Per-run knobs the stepper needs, distilled from a ScenarioSpec.
struct SimParams {
    double dt = 0.1;
    GainSet gains;
    UavParams uav;
    ManeuverMode mode = ManeuverMode::Planar;
    bool obstacle_avoidance_enabled = false;
    double u_max = 10.0;
    double retarget_interval = 5.0;
    LloydConfig lloyd;
};

SimParams sim_params_from(const ScenarioSpec& spec);

/// Forward Euler: position advances with the pre-update velocity, then the
/// velocity absorbs the acceleration. The cached heading refreshes when the
/// new horizontal speed reaches kHeadingSpeedEps.
void integrate_step(UavState& state, const Vector3& accel, double dt);

/// Translate each obstacle whose activation time has arrived by v * dt.
/// `t` is the tick's start time.
void update_obstacles(std::vector<MovingObstacle>& obstacles, double t, double dt);

/// Region pose at absolute time t: the center drifts at the region velocity
/// from its initial pose; half-extents morph linearly (over the transition
/// window) from their value at the last phase change toward the active
/// phase's profile.
BarrierRegion barrier_at(const WorldState& world, double t);

/// Evaluate phase triggers against the current state. Deploy -> Corridor
/// once any agent is strictly within r_d of a building; Corridor -> Recover
/// once the region's trailing x face has cleared the buildings by more than
/// r_d. Returns true (and stamps the transition bookkeeping) on a change.
bool update_phase(WorldState& world, const UavParams& uav);

/// Re-run the coverage iteration on the current region and hand each agent,
/// in index order, the nearest unclaimed output point. cold_start seeds the
/// iteration with fresh region samples, otherwise the current targets warm
/// start it. Consumes draws from `rng` only.
void refresh_cvt_targets(WorldState& world, const LloydConfig& lloyd, std::mt19937_64& rng,
                         bool cold_start);

/// Advance one tick: phase triggers, region morph/drift, obstacle motion,
/// coverage refresh (on phase change or every retarget interval; rigid
/// co-drift otherwise), one control evaluation per agent against the frozen
/// snapshot, Euler integration, then logging (including one safety-violation
/// event per pair at or below r_s).
void step_world(WorldState& world, const SimParams& params, std::mt19937_64& lloyd_rng,
                TrajectoryLog& log);

/// Build the initial world: agent placement (spec override or the clustered
/// default), deploy region, initial coverage targets.
WorldState init_world(const ScenarioSpec& spec, std::uint64_t seed, std::mt19937_64& lloyd_rng);

/// Run a scenario to completion; the log holds floor(duration/dt) + 1
/// records. The seed argument overrides spec.seed.
TrajectoryLog run_simulation(const ScenarioSpec& spec, std::uint64_t seed);

} // namespace swarmsim
