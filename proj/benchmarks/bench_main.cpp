// Microbenchmarks for the hot paths: the coverage iteration, one engine
// tick, and a single control evaluation at growing fleet sizes.
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "swarmsim/control.hpp"
#include "swarmsim/engine.hpp"
#include "swarmsim/lloyd.hpp"
#include "swarmsim/region.hpp"
#include "swarmsim/rng.hpp"
#include "swarmsim/scenario.hpp"

using namespace swarmsim;

namespace {

void BM_LloydRun(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const BarrierRegion region{RegionKind::PlanarBox, {0.0, 0.0, 5.0}, {10.0, 5.0, 0.0}, {}};
    LloydConfig cfg;
    cfg.count = n;
    cfg.max_iterations = 20;
    cfg.movement_tolerance = 0.0;  // fixed 20 iterations for a stable workload
    std::uint64_t seed = 1;
    for (auto _ : state) {
        cfg.seed = seed++;
        benchmark::DoNotOptimize(lloyd_run(region, DensityField::uniform(), cfg));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * 20 *
                            static_cast<std::int64_t>(cfg.resolved_samples()));
}
BENCHMARK(BM_LloydRun)->Arg(8)->Arg(12)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_StepWorld(benchmark::State& state) {
    const int case_id = static_cast<int>(state.range(0));
    const ScenarioSpec spec = build_case(case_id);
    const SimParams params = sim_params_from(spec);
    std::mt19937_64 lloyd_rng(derive_seed(1, 1));
    WorldState world = init_world(spec, 1, lloyd_rng);
    TrajectoryLog log;
    log.agent_count = spec.agents;
    log.dt = spec.dt;
    for (auto _ : state) {
        step_world(world, params, lloyd_rng, log);
        // Keep the log from growing without bound during long runs.
        if (log.records.size() > 4096) {
            log.records.clear();
            log.events.clear();
        }
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(spec.agents));
}
BENCHMARK(BM_StepWorld)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

void BM_TotalControl(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> coord(-10.0, 10.0);
    std::uniform_real_distribution<double> vel(-2.0, 2.0);
    std::vector<UavState> states(n);
    std::vector<Vector3> targets(n);
    for (std::size_t i = 0; i < n; ++i) {
        states[i].position = {coord(rng), coord(rng), coord(rng)};
        states[i].velocity = {vel(rng), vel(rng), vel(rng)};
        targets[i] = {coord(rng), coord(rng), coord(rng)};
    }
    const std::vector<ObstacleView> obstacles{{{2.0, 0.0, 0.0}, 1.0}, {{-3.0, 1.0, 0.0}, 1.0}};
    const std::vector<Building> buildings{{{-1.0, -8.0, 0.0}, {1.0, -4.0, 12.0}}};
    GainSet gains;
    UavParams uav;

    ControlContext ctx;
    ctx.states = states;
    ctx.targets = targets;
    ctx.obstacles = obstacles;
    ctx.buildings = buildings;
    ctx.mode = ManeuverMode::Planar;
    ctx.obstacle_avoidance_enabled = true;
    ctx.u_max = 10.0;

    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(total_control(i, ctx, gains, uav));
        i = (i + 1) % n;
    }
}
BENCHMARK(BM_TotalControl)->Arg(8)->Arg(32)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
