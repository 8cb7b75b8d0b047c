#pragma once

#include <cstddef>
#include <string>

#include "swarmsim/scenario.hpp"
#include "swarmsim/series.hpp"
#include "swarmsim/world.hpp"

namespace swarmsim::cli {

/// Top-down trajectory figure: one polyline per agent (start ring, end dot),
/// buildings as grey boxes, sphere obstacles as circles at their initial
/// pose plus a dashed circle at their final pose when they move. Equal
/// horizontal scale on both axes. Byte-deterministic for identical inputs.
std::string plan_view_svg(const TrajectoryLog& log, const ScenarioSpec& spec);

/// Distance-to-reference-agent curves over time, one per other agent, with a
/// dashed horizontal guide at 2 m and the global minimum called out in the
/// subtitle. Byte-deterministic for identical inputs.
std::string distance_svg(const MinDistanceSeries& series, std::size_t ref,
                         const std::string& name);

/// Altitude-vs-time curves, one per agent, with a dashed guide at the
/// region's nominal altitude. Byte-deterministic for identical inputs.
std::string altitude_svg(const TrajectoryLog& log, double nominal_altitude,
                         const std::string& name);

}  // namespace swarmsim::cli
