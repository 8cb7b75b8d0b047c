#include "swarmsim/series.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "swarmsim/engine.hpp"

namespace swarmsim {

namespace {

void require_nonempty(const TrajectoryLog& log) {
    if (log.records.empty() || log.agent_count == 0) {
        throw std::invalid_argument("trajectory log is empty");
    }
}

}  // namespace

MinDistanceSeries min_distance_series(const TrajectoryLog& log, std::size_t reference_agent) {
    require_nonempty(log);
    if (reference_agent >= log.agent_count) {
        throw std::out_of_range("reference agent index out of range");
    }
    MinDistanceSeries out;
    out.time.reserve(log.records.size());
    out.distance.reserve(log.records.size());
    out.min_distance.reserve(log.records.size());
    out.global_min = std::numeric_limits<double>::infinity();
    out.global_min_time = 0.0;
    for (const TickRecord& rec : log.records) {
        const Vector3 p_ref = rec.agents[reference_agent].position;
        std::vector<double> row(log.agent_count, 0.0);
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < log.agent_count; ++i) {
            if (i == reference_agent) continue;
            const double d = norm(rec.agents[i].position - p_ref);
            row[i] = d;
            if (d < best) best = d;
        }
        if (log.agent_count < 2) best = std::numeric_limits<double>::infinity();
        out.time.push_back(rec.time);
        out.distance.push_back(std::move(row));
        out.min_distance.push_back(best);
        if (best < out.global_min) {
            out.global_min = best;
            out.global_min_time = rec.time;
        }
    }
    return out;
}

SwarmSeparationSeries swarm_separation_series(const TrajectoryLog& log) {
    require_nonempty(log);
    if (log.agent_count < 2) {
        throw std::invalid_argument("swarm separation needs at least two agents");
    }
    SwarmSeparationSeries out;
    out.time.reserve(log.records.size());
    out.min_distance.reserve(log.records.size());
    out.global_min = std::numeric_limits<double>::infinity();
    out.global_min_time = 0.0;
    for (const TickRecord& rec : log.records) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i + 1 < log.agent_count; ++i) {
            for (std::size_t j = i + 1; j < log.agent_count; ++j) {
                const double d = norm(rec.agents[j].position - rec.agents[i].position);
                if (d < best) best = d;
            }
        }
        out.time.push_back(rec.time);
        out.min_distance.push_back(best);
        if (best < out.global_min) {
            out.global_min = best;
            out.global_min_time = rec.time;
        }
    }
    return out;
}

ClearanceSeries clearance_series(const TrajectoryLog& log, const ScenarioSpec& spec,
                                 std::size_t reference_agent) {
    require_nonempty(log);
    if (reference_agent >= log.agent_count) {
        throw std::out_of_range("reference agent index out of range");
    }

    // Rebuild the moving-obstacle state exactly as the engine does so the
    // replayed centres match the run bit for bit.
    std::vector<MovingObstacle> obstacles;
    obstacles.reserve(spec.obstacles.size());
    for (const ObstacleSpec& o : spec.obstacles) {
        MovingObstacle mo;
        mo.view.center = o.center;
        mo.view.r_ok = o.r_ok;
        mo.velocity = o.velocity;
        mo.activation_time = o.activation_time;
        obstacles.push_back(mo);
    }

    const std::size_t n_obs = obstacles.size();
    const std::size_t n_bld = spec.buildings.size();
    const std::size_t n_cols = n_obs + n_bld;

    ClearanceSeries out;
    out.time.reserve(log.records.size());
    out.clearance.reserve(log.records.size());
    out.min_clearance.reserve(log.records.size());
    out.global_min = std::numeric_limits<double>::infinity();
    out.global_min_time = 0.0;

    for (std::size_t k = 0; k < log.records.size(); ++k) {
        const TickRecord& rec = log.records[k];
        if (k > 0) {
            // The engine moves obstacles once per step using the time at the
            // start of the step, i.e. the previous record's timestamp.
            update_obstacles(obstacles, log.records[k - 1].time, log.dt);
        }
        const Vector3 p = rec.agents[reference_agent].position;
        std::vector<double> row(n_cols, 0.0);
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < n_obs; ++j) {
            const double d = norm(p - obstacles[j].view.center) - obstacles[j].view.r_ok;
            row[j] = d;
            if (d < best) best = d;
        }
        for (std::size_t j = 0; j < n_bld; ++j) {
            const Building& b = spec.buildings[j];
            const double d = b.distance(p);
            row[n_obs + j] = d;
            if (d < best) best = d;
            if (b.contains(p)) out.any_inside_building = true;
        }
        out.time.push_back(rec.time);
        out.clearance.push_back(std::move(row));
        out.min_clearance.push_back(best);
        if (best < out.global_min) {
            out.global_min = best;
            out.global_min_time = rec.time;
        }
    }
    return out;
}

}  // namespace swarmsim
