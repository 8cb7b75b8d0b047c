#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "swarmsim/lloyd.hpp"
#include "swarmsim/region.hpp"
#include "swarmsim/types.hpp"

namespace swarmsim {

/// Sphere obstacle that starts translating at a fixed simulated time.
/// velocity zero means the obstacle is static regardless of activation_time.
struct ObstacleSpec {
    Vector3 center;
    double r_ok = 1.0;
    Vector3 velocity;
    double activation_time = 0.0;
};

/// Everything a run needs. Loadable from a single JSON document; see the
/// README for the schema with fields, units, and defaults.
struct ScenarioSpec {
    std::string name = "custom";
    std::size_t agents = 8;
    double duration = 145.0;          ///< s
    double dt = 0.1;                  ///< s
    ManeuverMode mode = ManeuverMode::Planar;
    GainSet gains;
    UavParams uav;
    /// Deploy-phase region at its t = 0 pose. The default is a stationary
    /// 20 m x 10 m rectangle at 5 m altitude, so an empty document is runnable.
    BarrierRegion barrier{RegionKind::PlanarBox, {0.0, 0.0, 5.0}, {10.0, 5.0, 0.0}, {}};
    /// Region profile while crossing the corridor. When the JSON document
    /// omits it, the loader copies the barrier's half-extents (no squeeze).
    Vector3 corridor_half_extents{10.0, 5.0, 0.0};
    double transition_window = 5.0;   ///< s, linear morph between region profiles
    double retarget_interval = 5.0;   ///< s between coverage refreshes
    std::vector<Building> buildings;
    std::vector<ObstacleSpec> obstacles;
    bool obstacle_avoidance_enabled = false;
    double u_max = 10.0;              ///< m/s^2 acceleration clamp
    LloydConfig lloyd;                ///< count is forced to `agents`
    std::uint64_t seed = 1;
    /// Explicit start positions (overrides the default clustered placement
    /// when present; size must then equal `agents`).
    std::optional<std::vector<Vector3>> initial_positions;

    /// All violated rules, empty when the spec is runnable. `warnings`
    /// receives non-fatal findings (e.g. a region too small for the fleet).
    std::vector<std::string> validate(std::vector<std::string>* warnings = nullptr) const;
};

/// Thrown by the loaders; carries one message per violated rule.
struct ValidationError : std::runtime_error {
    std::vector<std::string> violations;
    explicit ValidationError(std::vector<std::string> v);
};

/// Cluster placement: per agent, standard-normal (x, y) pairs are drawn via
/// the polar method until both land in (0, 1); z = 0. One pair per attempt.
std::vector<Vector3> initial_positions(std::size_t count, std::mt19937_64& rng);

/// Built-in study presets 1, 2, 3. Throws std::invalid_argument otherwise.
ScenarioSpec build_case(int number);

/// Dynamic-obstacle velocity presets (m/s).
inline constexpr Vector3 kMovingObstacleVelocityDefault{0.2, 0.05, 0.0};
inline constexpr Vector3 kMovingObstacleVelocitySlow{0.1, 0.025, 0.0};

/// Parse + validate a scenario from JSON text. `origin` names the source in
/// error messages. Unknown keys anywhere in the document are rejected.
ScenarioSpec parse_spec(const std::string& json_text, const std::string& origin);

/// Load a scenario from a JSON file.
ScenarioSpec load_spec(const std::string& path);

/// Canonical JSON for a spec (sorted keys, round-trip exact numbers).
/// parse_spec(spec_to_json(s)) reproduces s field for field.
std::string spec_to_json(const ScenarioSpec& spec);

} // namespace swarmsim
