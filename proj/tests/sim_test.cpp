#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>
#include <vector>

#include "swarmsim/engine.hpp"
#include "swarmsim/log_io.hpp"
#include "swarmsim/rng.hpp"
#include "swarmsim/scenario.hpp"
#include "swarmsim/series.hpp"

namespace swarmsim {
namespace {

/// Quiet scenario: one slab region, no buildings or obstacles, and an
/// acceleration bound so small that every control clamps to a magnitude whose
/// position increments vanish in double rounding — agents stay bitwise put
/// while the gain set remains valid.
ScenarioSpec quiet_spec(std::size_t agents, double duration) {
    ScenarioSpec s;
    s.name = "quiet";
    s.agents = agents;
    s.duration = duration;
    s.dt = 0.1;
    s.u_max = 1e-300;
    s.barrier.kind = RegionKind::PlanarBox;
    s.barrier.center = {0.0, 0.0, 5.0};
    s.barrier.half_extents = {10.0, 5.0, 0.0};
    s.corridor_half_extents = {10.0, 5.0, 0.0};
    s.lloyd.max_iterations = 5;
    return s;
}

TEST(IntegrateTest, PositionUsesThePreUpdateVelocity) {
    UavState s{{0, 0, 0}, {1, 0, 0}, 0.0};
    integrate_step(s, {0, 10, 0}, 0.1);
    EXPECT_EQ(s.position, (Vector3{0.1, 0.0, 0.0}));
    EXPECT_EQ(s.velocity, (Vector3{1.0, 1.0, 0.0}));
    // New horizontal velocity (1, 1) refreshes the cached heading.
    EXPECT_DOUBLE_EQ(s.heading, std::atan2(1.0, 1.0));
}

TEST(IntegrateTest, SlowMotionKeepsTheCachedHeading) {
    UavState s{{0, 0, 0}, {5e-4, 0, 0}, 2.0};
    integrate_step(s, {0, 0, 0}, 0.1);
    EXPECT_DOUBLE_EQ(s.heading, 2.0);
}

TEST(IntegrateTest, CoastingIsExact) {
    UavState s{{1, 2, 3}, {0.5, -0.25, 1.0}, 0.0};
    for (int k = 0; k < 100; ++k) integrate_step(s, {0, 0, 0}, 0.1);
    EXPECT_NEAR(s.position.x, 1.0 + 0.5 * 10.0, 1e-9);
    EXPECT_NEAR(s.position.y, 2.0 - 0.25 * 10.0, 1e-9);
    EXPECT_NEAR(s.position.z, 3.0 + 1.0 * 10.0, 1e-9);
    EXPECT_EQ(s.velocity, (Vector3{0.5, -0.25, 1.0}));
}

TEST(ObstacleMotionTest, WaitsForActivation) {
    std::vector<MovingObstacle> obs(1);
    obs[0].view.center = {10, 0, 0};
    obs[0].velocity = {1.0, 0.0, 0.0};
    obs[0].activation_time = 1.0;
    update_obstacles(obs, 0.95, 0.1);
    EXPECT_EQ(obs[0].view.center, (Vector3{10, 0, 0}));
    update_obstacles(obs, 1.0, 0.1);
    EXPECT_EQ(obs[0].view.center, (Vector3{10.1, 0, 0}));
    update_obstacles(obs, 1.1, 0.1);
    EXPECT_EQ(obs[0].view.center, (Vector3{10.2, 0, 0}));
}

WorldState morphing_world() {
    WorldState w;
    w.barrier.kind = RegionKind::PlanarBox;
    w.barrier.center = {0, 0, 5};
    w.barrier.half_extents = {10, 5, 0};
    w.barrier.velocity = {1.0, 0.0, 0.0};
    w.barrier_initial_center = {0, 0, 5};
    w.deploy_half_extents = {10, 5, 0};
    w.corridor_half_extents = {15, 2, 0};
    w.transition_window = 5.0;
    w.phase_start_time = 10.0;
    w.half_extents_at_phase_start = {10, 5, 0};
    w.phase = Phase::Corridor;
    return w;
}

TEST(BarrierPoseTest, CenterDriftsLinearly) {
    const WorldState w = morphing_world();
    EXPECT_EQ(barrier_at(w, 0.0).center, (Vector3{0, 0, 5}));
    EXPECT_EQ(barrier_at(w, 12.0).center, (Vector3{12.0, 0, 5}));
}

TEST(BarrierPoseTest, HalfExtentsMorphOverTheWindow) {
    const WorldState w = morphing_world();
    // Phase started at t = 10 from (10, 5); corridor profile is (15, 2).
    EXPECT_EQ(barrier_at(w, 10.0).half_extents, (Vector3{10, 5, 0}));
    const Vector3 mid = barrier_at(w, 12.5).half_extents;
    EXPECT_DOUBLE_EQ(mid.x, 12.5);
    EXPECT_DOUBLE_EQ(mid.y, 3.5);
    EXPECT_EQ(barrier_at(w, 15.0).half_extents, (Vector3{15, 2, 0}));
    EXPECT_EQ(barrier_at(w, 40.0).half_extents, (Vector3{15, 2, 0}));
}

TEST(BarrierPoseTest, RecoverMorphsBackToTheDeployProfile) {
    WorldState w = morphing_world();
    w.phase = Phase::Recover;
    w.phase_start_time = 30.0;
    w.half_extents_at_phase_start = {15, 2, 0};
    EXPECT_EQ(barrier_at(w, 30.0).half_extents, (Vector3{15, 2, 0}));
    const Vector3 mid = barrier_at(w, 32.5).half_extents;
    EXPECT_DOUBLE_EQ(mid.x, 12.5);
    EXPECT_DOUBLE_EQ(mid.y, 3.5);
    EXPECT_EQ(barrier_at(w, 35.0).half_extents, (Vector3{10, 5, 0}));
}

TEST(PhaseTriggerTest, BuildingProximityStartsTheCorridor) {
    WorldState w = morphing_world();
    w.phase = Phase::Deploy;
    w.phase_start_time = 0.0;
    w.time = 20.0;
    w.buildings.push_back(Building{{40, 3, 0}, {50, 11, 12}});
    w.agents.push_back(UavState{{0, 0, 5}, {0, 0, 0}, 0.0});
    UavParams uav;  // r_d = 2
    EXPECT_FALSE(update_phase(w, uav));
    // 1.9 m from the building's x face: strictly inside the detection range.
    w.agents[0].position = {38.1, 5.0, 5.0};
    EXPECT_TRUE(update_phase(w, uav));
    EXPECT_EQ(w.phase, Phase::Corridor);
    EXPECT_DOUBLE_EQ(w.phase_start_time, 20.0);
    EXPECT_EQ(w.half_extents_at_phase_start, w.barrier.half_extents);
}

TEST(PhaseTriggerTest, ClearingTheBuildingsStartsRecovery) {
    WorldState w = morphing_world();
    w.phase = Phase::Corridor;
    w.time = 60.0;
    w.buildings.push_back(Building{{40, 3, 0}, {50, 11, 12}});
    w.agents.push_back(UavState{{60, 0, 5}, {0, 0, 0}, 0.0});
    UavParams uav;
    // Trailing face at center.x - half.x = 51.9, needs to clear 50 + 2.
    w.barrier.center = {61.9, 0, 5};
    w.barrier.half_extents = {10, 5, 0};
    EXPECT_FALSE(update_phase(w, uav));
    w.barrier.center = {62.1, 0, 5};
    EXPECT_TRUE(update_phase(w, uav));
    EXPECT_EQ(w.phase, Phase::Recover);
}

TEST(RunTest, RecordCountHandlesRepresentationNoise) {
    // 1.4 / 0.1 is 13.999... in floating point; the step count must still
    // resolve to 14 (15 records including the initial one).
    ScenarioSpec s = quiet_spec(2, 1.4);
    const TrajectoryLog log = run_simulation(s, 1);
    EXPECT_EQ(log.records.size(), 15u);
    EXPECT_EQ(log.records.front().tick, 0);
    EXPECT_EQ(log.records.back().tick, 14);
    EXPECT_NEAR(log.records.back().time, 1.4, 1e-12);
    EXPECT_EQ(log.agent_count, 2u);
    EXPECT_EQ(log.dt, 0.1);
}

TEST(RunTest, InitialRecordHasZeroControlsAndStationaryAgents) {
    ScenarioSpec s = quiet_spec(3, 0.5);
    const TrajectoryLog log = run_simulation(s, 7);
    const TickRecord& first = log.records.front();
    ASSERT_EQ(first.agents.size(), 3u);
    for (const AgentRecord& a : first.agents) {
        EXPECT_EQ(a.velocity, (Vector3{0, 0, 0}));
        EXPECT_EQ(a.control, (Vector3{0, 0, 0}));
        // Default placement clusters agents in the unit square at z = 0.
        EXPECT_GT(a.position.x, 0.0);
        EXPECT_LT(a.position.x, 1.0);
        EXPECT_GT(a.position.y, 0.0);
        EXPECT_LT(a.position.y, 1.0);
        EXPECT_EQ(a.position.z, 0.0);
    }
}

TEST(RunTest, ExplicitInitialPositionsAreUsedVerbatim) {
    ScenarioSpec s = quiet_spec(2, 0.2);
    s.initial_positions = std::vector<Vector3>{{-3.0, 1.0, 5.0}, {4.0, -2.0, 5.0}};
    const TrajectoryLog log = run_simulation(s, 1);
    EXPECT_EQ(log.records[0].agents[0].position, (Vector3{-3.0, 1.0, 5.0}));
    EXPECT_EQ(log.records[0].agents[1].position, (Vector3{4.0, -2.0, 5.0}));
    // The acceleration bound is vanishingly small, so nobody moves.
    EXPECT_EQ(log.records.back().agents[0].position, (Vector3{-3.0, 1.0, 5.0}));
}

TEST(RunTest, DeterministicAcrossRunsAndSensitiveToTheSeed) {
    ScenarioSpec s = quiet_spec(4, 1.0);
    s.u_max = 10.0;  // realistic bound so dynamics actually happen
    const TrajectoryLog a = run_simulation(s, 42);
    const TrajectoryLog b = run_simulation(s, 42);
    ASSERT_EQ(a.records.size(), b.records.size());
    for (std::size_t k = 0; k < a.records.size(); ++k) {
        for (std::size_t i = 0; i < a.agent_count; ++i) {
            EXPECT_EQ(a.records[k].agents[i].position, b.records[k].agents[i].position);
            EXPECT_EQ(a.records[k].agents[i].velocity, b.records[k].agents[i].velocity);
            EXPECT_EQ(a.records[k].agents[i].control, b.records[k].agents[i].control);
        }
    }
    const TrajectoryLog c = run_simulation(s, 43);
    EXPECT_NE(c.records[0].agents[0].position, a.records[0].agents[0].position);
}

TEST(RunTest, SeedArgumentOverridesTheSpecSeed) {
    ScenarioSpec s = quiet_spec(2, 0.2);
    s.seed = 5;
    const TrajectoryLog a = run_simulation(s, 9);
    ScenarioSpec s2 = quiet_spec(2, 0.2);
    s2.seed = 1234;  // ignored in favor of the argument
    const TrajectoryLog b = run_simulation(s2, 9);
    EXPECT_EQ(a.records[0].agents[0].position, b.records[0].agents[0].position);
}

TEST(RunTest, InvalidSpecThrowsValidationError) {
    ScenarioSpec s = quiet_spec(2, 1.0);
    s.uav.r_s = 3.0;  // violates r_s < r_d
    EXPECT_THROW(run_simulation(s, 1), ValidationError);
}

TEST(StepTest, TargetsCoDriftBetweenRefreshes) {
    ScenarioSpec s = quiet_spec(3, 5.0);
    s.barrier.velocity = {1.0, 0.0, 0.0};
    s.retarget_interval = 1000.0;  // never refresh during this test
    std::mt19937_64 lloyd_rng(derive_seed(2, 1));
    WorldState w = init_world(s, 2, lloyd_rng);
    const std::vector<Vector3> before = w.targets;
    const SimParams params = sim_params_from(s);
    TrajectoryLog log;
    log.agent_count = s.agents;
    log.dt = s.dt;
    step_world(w, params, lloyd_rng, log);
    step_world(w, params, lloyd_rng, log);
    ASSERT_EQ(w.targets.size(), before.size());
    for (std::size_t i = 0; i < before.size(); ++i) {
        EXPECT_EQ(w.targets[i].x, before[i].x + 0.1 + 0.1);
        EXPECT_EQ(w.targets[i].y, before[i].y);
        EXPECT_EQ(w.targets[i].z, before[i].z);
    }
}

TEST(StepTest, PeriodicRefreshStampsTheClock) {
    ScenarioSpec s = quiet_spec(2, 5.0);
    s.retarget_interval = 0.5;
    std::mt19937_64 lloyd_rng(derive_seed(3, 1));
    WorldState w = init_world(s, 3, lloyd_rng);
    EXPECT_DOUBLE_EQ(w.last_refresh_time, 0.0);
    const SimParams params = sim_params_from(s);
    TrajectoryLog log;
    log.agent_count = s.agents;
    log.dt = s.dt;
    for (int k = 0; k < 4; ++k) step_world(w, params, lloyd_rng, log);
    EXPECT_DOUBLE_EQ(w.last_refresh_time, 0.0);  // 0.4 s elapsed, not yet
    step_world(w, params, lloyd_rng, log);
    EXPECT_NEAR(w.last_refresh_time, 0.5, 1e-12);  // time accumulates in dt steps
    for (int k = 0; k < 5; ++k) step_world(w, params, lloyd_rng, log);
    EXPECT_NEAR(w.last_refresh_time, 1.0, 1e-12);
}

TEST(StepTest, NonFiniteStateAborts) {
    ScenarioSpec s = quiet_spec(1, 1.0);
    std::mt19937_64 lloyd_rng(derive_seed(4, 1));
    WorldState w = init_world(s, 4, lloyd_rng);
    w.agents[0].position.x = std::numeric_limits<double>::quiet_NaN();
    const SimParams params = sim_params_from(s);
    TrajectoryLog log;
    log.agent_count = 1;
    log.dt = s.dt;
    EXPECT_THROW(step_world(w, params, lloyd_rng, log), SimulationAbort);
}

TEST(EventTest, TouchingPairsAreLoggedEveryTick) {
    ScenarioSpec s = quiet_spec(3, 0.3);
    // Agents 0 and 1 sit 0.5 m apart (inside r_s = 1); agent 2 is far away.
    s.initial_positions =
        std::vector<Vector3>{{0.0, 0.0, 5.0}, {0.5, 0.0, 5.0}, {8.0, 0.0, 5.0}};
    const TrajectoryLog log = run_simulation(s, 1);
    ASSERT_EQ(log.records.size(), 4u);
    ASSERT_EQ(log.events.size(), 4u);  // one violation per tick, t = 0 included
    for (std::size_t k = 0; k < log.events.size(); ++k) {
        EXPECT_EQ(log.events[k].kind, EventKind::SafetyViolation);
        EXPECT_EQ(log.events[k].tick, static_cast<std::int64_t>(k));
        EXPECT_EQ(log.events[k].a, 0);
        EXPECT_EQ(log.events[k].b, 1);
    }
}

TEST(EventTest, PhaseChangesAreLogged) {
    ScenarioSpec s = quiet_spec(1, 2.0);
    s.barrier.velocity = {0.0, 0.0, 0.0};
    // A building within reach of the initial placement triggers the corridor
    // phase immediately; the event carries the new phase's ordinal.
    s.buildings.push_back(Building{{1.5, -5.0, 0.0}, {3.0, 5.0, 12.0}});
    s.initial_positions = std::vector<Vector3>{{0.4, 0.5, 5.0}};
    s.corridor_half_extents = {10.0, 5.0, 0.0};
    const TrajectoryLog log = run_simulation(s, 1);
    bool corridor_seen = false;
    for (const Event& e : log.events) {
        if (e.kind == EventKind::PhaseChange) {
            corridor_seen = true;
            EXPECT_EQ(e.a, 1);  // corridor ordinal
            EXPECT_EQ(e.b, -1);
        }
    }
    EXPECT_TRUE(corridor_seen);
    EXPECT_EQ(log.records.back().phase, Phase::Corridor);
}

TrajectoryLog tiny_log() {
    TrajectoryLog log;
    log.agent_count = 2;
    log.dt = 0.5;
    for (int k = 0; k < 3; ++k) {
        TickRecord rec;
        rec.tick = k;
        rec.time = 0.5 * k;
        rec.phase = Phase::Deploy;
        AgentRecord a0;
        a0.position = {0.0, 0.0, 0.0};
        AgentRecord a1;
        a1.position = {3.0 - k, 0.0, 0.0};  // closes in: 3, 2, 1
        rec.agents = {a0, a1};
        log.records.push_back(rec);
    }
    return log;
}

TEST(SeriesTest, MinDistanceTracksTheClosestOther) {
    const TrajectoryLog log = tiny_log();
    const MinDistanceSeries s = min_distance_series(log, 0);
    ASSERT_EQ(s.time.size(), 3u);
    EXPECT_EQ(s.min_distance[0], 3.0);
    EXPECT_EQ(s.min_distance[1], 2.0);
    EXPECT_EQ(s.min_distance[2], 1.0);
    EXPECT_EQ(s.global_min, 1.0);
    EXPECT_EQ(s.global_min_time, 1.0);
    EXPECT_EQ(s.distance[1][1], 2.0);
    EXPECT_EQ(s.distance[1][0], 0.0);  // own column zeroed
    EXPECT_THROW(min_distance_series(log, 5), std::out_of_range);
}

TEST(SeriesTest, SwarmSeparationScansAllPairs) {
    TrajectoryLog log = tiny_log();
    // Add a third agent far away; the pairwise minimum is unchanged.
    log.agent_count = 3;
    for (TickRecord& rec : log.records) {
        AgentRecord far;
        far.position = {100.0, 0.0, 0.0};
        rec.agents.push_back(far);
    }
    const SwarmSeparationSeries s = swarm_separation_series(log);
    EXPECT_EQ(s.min_distance[2], 1.0);
    EXPECT_EQ(s.global_min, 1.0);
    EXPECT_EQ(s.global_min_time, 1.0);
}

TEST(SeriesTest, ClearanceReplaysObstacleMotionExactly) {
    // A run with a moving obstacle: the series must land on the same
    // obstacle centers the engine used, bit for bit.
    ScenarioSpec s = quiet_spec(1, 1.0);
    s.initial_positions = std::vector<Vector3>{{0.5, 0.5, 5.0}};
    ObstacleSpec obs;
    obs.center = {10.0, 0.5, 5.0};
    obs.r_ok = 1.0;
    obs.velocity = {-1.0, 0.0, 0.0};
    obs.activation_time = 0.0;
    s.obstacles.push_back(obs);
    const TrajectoryLog log = run_simulation(s, 1);
    const ClearanceSeries c = clearance_series(log, s, 0);
    ASSERT_EQ(c.time.size(), log.records.size());
    // At tick k the obstacle has moved k steps of -0.1 in x.
    for (std::size_t k = 0; k < c.time.size(); ++k) {
        const double cx = 10.0 - 0.1 * static_cast<double>(k);
        const double expected = std::abs(cx - 0.5) - 1.0;
        EXPECT_NEAR(c.clearance[k][0], expected, 1e-12);
    }
    EXPECT_EQ(c.global_min, c.min_clearance.back());
    EXPECT_FALSE(c.any_inside_building);
}

TEST(SeriesTest, BuildingClearanceAndContainmentFlag) {
    ScenarioSpec s = quiet_spec(1, 0.2);
    s.buildings.push_back(Building{{2.0, -1.0, 0.0}, {4.0, 1.0, 12.0}});
    s.initial_positions = std::vector<Vector3>{{0.5, 0.0, 5.0}};
    const TrajectoryLog log = run_simulation(s, 1);
    const ClearanceSeries c = clearance_series(log, s, 0);
    EXPECT_NEAR(c.min_clearance[0], 1.5, 1e-12);
    EXPECT_FALSE(c.any_inside_building);

    // Force a record inside the building and re-derive.
    TrajectoryLog bad = log;
    bad.records[0].agents[0].position = {3.0, 0.0, 5.0};
    const ClearanceSeries inside = clearance_series(bad, s, 0);
    EXPECT_TRUE(inside.any_inside_building);
    EXPECT_EQ(inside.min_clearance[0], 0.0);
}

TEST(LogIoTest, TrajectoryRoundTripIsExact) {
    ScenarioSpec s = quiet_spec(3, 0.7);
    s.u_max = 10.0;  // real dynamics produce awkward digits worth round-tripping
    const TrajectoryLog log = run_simulation(s, 11);
    std::stringstream buf;
    write_trajectory_csv(buf, log);
    const TrajectoryLog back = read_trajectory_csv(buf);
    ASSERT_EQ(back.records.size(), log.records.size());
    ASSERT_EQ(back.agent_count, log.agent_count);
    EXPECT_EQ(back.dt, log.dt);
    for (std::size_t k = 0; k < log.records.size(); ++k) {
        EXPECT_EQ(back.records[k].tick, log.records[k].tick);
        EXPECT_EQ(back.records[k].time, log.records[k].time);
        EXPECT_EQ(back.records[k].phase, log.records[k].phase);
        for (std::size_t i = 0; i < log.agent_count; ++i) {
            const AgentRecord& a = log.records[k].agents[i];
            const AgentRecord& b = back.records[k].agents[i];
            EXPECT_EQ(a.position, b.position);
            EXPECT_EQ(a.velocity, b.velocity);
            EXPECT_EQ(a.control, b.control);
            EXPECT_EQ(a.detected_count, b.detected_count);
        }
    }
}

TEST(LogIoTest, IdenticalLogsSerializeToIdenticalBytes) {
    ScenarioSpec s = quiet_spec(2, 0.5);
    s.gains = GainSet{};
    const TrajectoryLog a = run_simulation(s, 21);
    const TrajectoryLog b = run_simulation(s, 21);
    std::stringstream sa, sb;
    write_trajectory_csv(sa, a);
    write_trajectory_csv(sb, b);
    EXPECT_EQ(sa.str(), sb.str());
}

TEST(LogIoTest, EventsRoundTrip) {
    std::vector<Event> events{{0, EventKind::SafetyViolation, 0, 1},
                              {306, EventKind::PhaseChange, 1, -1},
                              {307, EventKind::SafetyViolation, 2, 5}};
    std::stringstream buf;
    write_events_csv(buf, events);
    const std::vector<Event> back = read_events_csv(buf);
    ASSERT_EQ(back.size(), 3u);
    for (std::size_t k = 0; k < 3; ++k) {
        EXPECT_EQ(back[k].tick, events[k].tick);
        EXPECT_EQ(back[k].kind, events[k].kind);
        EXPECT_EQ(back[k].a, events[k].a);
        EXPECT_EQ(back[k].b, events[k].b);
    }
}

TEST(LogIoTest, MalformedRowsAreNamedInErrors) {
    const std::string header =
        "tick,time,agent,px,py,pz,vx,vy,vz,ux,uy,uz,detected_count,phase\n";
    const std::string good0 = "0,0,0,1,2,3,0,0,0,0,0,0,0,deploy\n";
    {
        std::stringstream bad(header + good0 + "0,0.1,1,1,2,3,0,0,0,0,0,0,0\n");
        try {
            read_trajectory_csv(bad);
            FAIL() << "expected a parse error";
        } catch (const std::runtime_error& e) {
            EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
        }
    }
    {
        std::stringstream bad(header + "0,0,0,1,2,bogus,0,0,0,0,0,0,0,deploy\n");
        EXPECT_THROW(read_trajectory_csv(bad), std::runtime_error);
    }
    {
        // Agent indices must be 0..n-1 in order within a tick.
        std::stringstream bad(header + good0 + "0,0,2,1,2,3,0,0,0,0,0,0,0,deploy\n");
        EXPECT_THROW(read_trajectory_csv(bad), std::runtime_error);
    }
    {
        std::stringstream bad(header + "0,0,0,1,2,3,0,0,0,0,0,0,0,warp\n");
        EXPECT_THROW(read_trajectory_csv(bad), std::runtime_error);
    }
    {
        std::stringstream empty("");
        EXPECT_THROW(read_trajectory_csv(empty), std::runtime_error);
    }
}

TEST(LogIoTest, ShortestRoundTripNumberFormat) {
    EXPECT_EQ(format_double(0.1), "0.1");
    EXPECT_EQ(format_double(0.0), "0");
    EXPECT_EQ(format_double(-2.5), "-2.5");
    const double third = 1.0 / 3.0;
    EXPECT_EQ(std::stod(format_double(third)), third);
    const double big = 1.23456789e300;
    EXPECT_EQ(std::stod(format_double(big)), big);
}

TEST(PhaseNameTest, RoundTrip) {
    for (Phase p : {Phase::Deploy, Phase::Corridor, Phase::Recover}) {
        EXPECT_EQ(phase_from_name(phase_name(p)), p);
    }
    EXPECT_THROW(phase_from_name("sideways"), std::invalid_argument);
}

}  // namespace
}  // namespace swarmsim
