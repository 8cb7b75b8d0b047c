#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "swarmsim/vec3.hpp"

namespace swarmsim {

enum class RegionKind {
    PlanarBox,  ///< axis-aligned rectangle at fixed altitude (z half-extent 0)
    Box,        ///< axis-aligned 3D box
};

/// Moving axis-aligned region the formation is asked to cover. A dimension
/// with zero half-extent is inactive: samples and projections pin it to the
/// center coordinate, which also permits degenerate segment regions.
struct BarrierRegion {
    RegionKind kind = RegionKind::PlanarBox;
    Vector3 center;
    Vector3 half_extents;
    Vector3 velocity;

    bool axis_active(int axis) const;
    int active_dims() const;
    bool contains(const Vector3& p) const;

    /// Empty when well-formed, otherwise one message per violated rule.
    std::vector<std::string> validate() const;
};

/// Project p into the region: clamp active dimensions into the box, pin
/// inactive dimensions to the center coordinate.
Vector3 project_into(const BarrierRegion& region, const Vector3& p);

/// Nonnegative sampling weight over the region. `bound` must dominate the
/// weight on the region; uniform fields skip the accept/reject draw entirely.
struct DensityField {
    std::function<double(const Vector3&)> weight;
    double bound = 1.0;
    bool is_uniform = true;

    static DensityField uniform() { return {}; }
    static DensityField weighted(std::function<double(const Vector3&)> w, double bound);
};

/// Draw `count` points from the region distributed per the density, by
/// rejection against the uniform box proposal. Draw order per proposal:
/// one uniform per active axis in x, y, z order, then (non-uniform fields
/// only) one acceptance uniform. Throws when the acceptance rate over a
/// million consecutive proposals falls below 0.1%.
std::vector<Vector3> sample_region(const BarrierRegion& region, const DensityField& density,
                                   std::size_t count, std::mt19937_64& rng);

} // namespace swarmsim
