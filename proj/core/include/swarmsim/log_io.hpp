#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "swarmsim/world.hpp"

namespace swarmsim {

/// Formats a double with the shortest decimal representation that parses
/// back to the same value (round-trip exact).
std::string format_double(double v);

/// Writes one row per agent per recorded tick with the header
/// `tick,time,agent,px,py,pz,vx,vy,vz,ux,uy,uz,detected_count,phase`.
/// All numbers round-trip exactly.
void write_trajectory_csv(std::ostream& os, const TrajectoryLog& log);
void write_trajectory_csv(const std::string& path, const TrajectoryLog& log);

/// Parses a trajectory CSV produced by write_trajectory_csv.  Rows must be
/// grouped by tick with agent indices 0..n-1 in order within each group.
/// `dt` is recovered from the first two timestamps (0 for a single record).
/// Throws std::runtime_error naming the offending line on malformed input.
TrajectoryLog read_trajectory_csv(std::istream& is);
TrajectoryLog read_trajectory_csv(const std::string& path);

/// Writes the event stream with the header `tick,kind,a,b` where kind is
/// `safety_violation` or `phase_change`.
void write_events_csv(std::ostream& os, const std::vector<Event>& events);
void write_events_csv(const std::string& path, const std::vector<Event>& events);

/// Parses an events CSV produced by write_events_csv.  Throws
/// std::runtime_error naming the offending line on malformed input.
std::vector<Event> read_events_csv(std::istream& is);
std::vector<Event> read_events_csv(const std::string& path);

}  // namespace swarmsim
