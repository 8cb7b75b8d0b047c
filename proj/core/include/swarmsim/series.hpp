#pragma once

#include <cstddef>
#include <vector>

#include "swarmsim/scenario.hpp"
#include "swarmsim/world.hpp"

namespace swarmsim {

/// Inter-agent separation history extracted from a trajectory log, taken
/// from the point of view of one reference agent.
struct MinDistanceSeries {
    /// Sample times, one per recorded tick.
    std::vector<double> time;
    /// distance[k][i] = distance from the reference agent to agent i at
    /// sample k.  The reference agent's own column holds zeros.
    std::vector<std::vector<double>> distance;
    /// Minimum over the other agents at each sample.
    std::vector<double> min_distance;
    /// Smallest value of min_distance over the whole run.
    double global_min = 0.0;
    /// Time at which global_min occurred (first occurrence).
    double global_min_time = 0.0;
};

/// Pairwise minimum separation across the whole swarm at each sample.
struct SwarmSeparationSeries {
    std::vector<double> time;
    /// Minimum over all unordered agent pairs at each sample.
    std::vector<double> min_distance;
    double global_min = 0.0;
    double global_min_time = 0.0;
};

/// Obstacle clearance history for one reference agent.  Sphere clearance is
/// measured to the sphere surface (centre distance minus the clearance
/// radius); building clearance is the Euclidean distance to the box, zero
/// inside.
struct ClearanceSeries {
    std::vector<double> time;
    /// clearance[k][j] = clearance from the reference agent to obstacle j at
    /// sample k (obstacles ordered as in the scenario).
    std::vector<std::vector<double>> clearance;
    /// Per-sample minimum over spheres and buildings; +inf when the scenario
    /// has neither.
    std::vector<double> min_clearance;
    double global_min = 0.0;
    double global_min_time = 0.0;
    /// True if the reference agent was ever strictly inside a building.
    bool any_inside_building = false;
};

/// Computes the separation history between `reference_agent` and every other
/// agent.  Throws std::out_of_range if the index is invalid, and
/// std::invalid_argument on an empty log.
MinDistanceSeries min_distance_series(const TrajectoryLog& log, std::size_t reference_agent);

/// Computes the swarm-wide pairwise minimum separation at each sample.
/// Requires at least two agents.
SwarmSeparationSeries swarm_separation_series(const TrajectoryLog& log);

/// Computes obstacle/building clearance for `reference_agent`, replaying the
/// scenario's obstacle motion with the engine's update rule so positions
/// match the simulation bit for bit.
ClearanceSeries clearance_series(const TrajectoryLog& log, const ScenarioSpec& spec,
                                 std::size_t reference_agent);

}  // namespace swarmsim
