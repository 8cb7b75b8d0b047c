#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "swarmsim/region.hpp"
#include "swarmsim/types.hpp"

namespace swarmsim {

enum class Phase {
    Deploy,    ///< spreading over the deploy region
    Corridor,  ///< squeezed to the corridor profile while crossing
    Recover,   ///< region re-expanded past the buildings
};

const char* phase_name(Phase p);
Phase phase_from_name(const std::string& name);

struct MovingObstacle {
    ObstacleView view;
    Vector3 velocity;
    double activation_time = 0.0;  ///< s; the center translates once t reaches this
};

/// Complete mutable simulation state. The barrier field always holds the
/// region as of `time`; the *_phase_start fields let it morph linearly
/// toward the active phase's profile.
struct WorldState {
    double time = 0.0;
    std::int64_t tick = 0;
    Phase phase = Phase::Deploy;

    std::vector<UavState> agents;
    std::vector<Vector3> targets;  ///< coverage target per agent

    BarrierRegion barrier;
    Vector3 barrier_initial_center;
    Vector3 deploy_half_extents;
    Vector3 corridor_half_extents;
    double transition_window = 5.0;
    double phase_start_time = 0.0;
    Vector3 half_extents_at_phase_start;
    double last_refresh_time = 0.0;

    std::vector<MovingObstacle> obstacles;
    std::vector<Building> buildings;
};

enum class EventKind {
    SafetyViolation,  ///< a pair of agents at or below r_s
    PhaseChange,
};

struct Event {
    std::int64_t tick = 0;
    EventKind kind = EventKind::SafetyViolation;
    /// SafetyViolation: the two agent indices (a < b).
    /// PhaseChange: a = ordinal of the new phase, b = -1.
    std::int64_t a = 0;
    std::int64_t b = 0;
};

struct AgentRecord {
    Vector3 position;
    Vector3 velocity;
    Vector3 control;
    int detected_count = 0;
};

struct TickRecord {
    std::int64_t tick = 0;
    double time = 0.0;
    Phase phase = Phase::Deploy;
    std::vector<AgentRecord> agents;
};

/// Per-tick records (including t = 0) plus the event stream. The control
/// stored at tick k is the acceleration that produced the tick-k state, zero
/// in the initial record.
struct TrajectoryLog {
    std::vector<TickRecord> records;
    std::vector<Event> events;
    std::size_t agent_count = 0;
    double dt = 0.0;
};

} // namespace swarmsim
