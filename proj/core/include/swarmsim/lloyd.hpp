#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "swarmsim/region.hpp"
#include "swarmsim/vec3.hpp"

namespace swarmsim {

/// Parameters of the probabilistic Lloyd iteration. The update for a point
/// whose cell captured at least one sample is
///
///   x <- ((alpha1*j + beta1) * x + (alpha2*j + beta2) * u) / (j + 1)
///
/// where u is the mean of the captured samples and j counts past nonempty
/// updates for that point. alpha1 + alpha2 and beta1 + beta2 must both be 1,
/// so the defaults (alpha2 = beta2 = 1) reduce to x <- u, i.e. each point
/// jumps to its fresh Monte Carlo centroid estimate.
struct LloydConfig {
    std::size_t count = 1;               ///< number of generator points
    std::size_t q_samples = 0;           ///< samples per iteration; 0 = 200 * count
    double alpha1 = 0.0;
    double alpha2 = 1.0;
    double beta1 = 0.0;
    double beta2 = 1.0;
    std::size_t max_iterations = 200;
    double movement_tolerance = 1e-3;    ///< max point movement that stops iterating
    std::uint64_t seed = 0;

    std::size_t resolved_samples() const { return q_samples == 0 ? 200 * count : q_samples; }
    std::vector<std::string> validate() const;
};

struct VoronoiCellStats {
    std::size_t count = 0;
    Vector3 mean;  ///< meaningful only when count > 0
};

struct LloydResult {
    std::vector<Vector3> points;
    std::vector<std::uint64_t> counters;     ///< j_i, 1 + number of nonempty updates
    std::size_t iterations = 0;
    std::vector<VoronoiCellStats> final_stats;  ///< stats of the last iteration
};

/// Called after every iteration with the iteration index (1-based) and the
/// current points; used for convergence diagnostics.
using LloydObserver = std::function<void(std::size_t, std::span<const Vector3>)>;

/// Nearest-generator index per sample; ties resolve to the lowest index.
std::vector<std::size_t> assign_to_nearest(std::span<const Vector3> samples,
                                           std::span<const Vector3> generators);

/// Per-cell sample count and mean for `n` generators.
std::vector<VoronoiCellStats> cell_stats(std::span<const Vector3> samples,
                                         std::span<const std::size_t> assignment, std::size_t n);

/// One weighted update step; see LloydConfig. j is the point's current counter.
Vector3 lloyd_point_update(const Vector3& x, const Vector3& u, std::uint64_t j,
                           const LloydConfig& config);

/// Full iteration with internally derived streams: initial points are drawn
/// from derive_seed(seed, 0), per-iteration samples from derive_seed(seed, 1).
LloydResult lloyd_run(const BarrierRegion& region, const DensityField& density,
                      const LloydConfig& config, const LloydObserver& observer = {});

/// Full iteration from explicit initial points (projected into the region
/// first) drawing all samples from the caller's stream.
LloydResult lloyd_run(const BarrierRegion& region, const DensityField& density,
                      const LloydConfig& config, std::vector<Vector3> initial_points,
                      std::mt19937_64& rng, const LloydObserver& observer = {});

/// Mean squared distance from each sample to its nearest generator.
double coverage_cost(std::span<const Vector3> generators, std::span<const Vector3> samples);

/// Per-generator descent direction M_i * (c_i - p_i) with cell mass M_i in
/// sample counts; zero for empty cells.
std::vector<Vector3> cvt_gradient(std::span<const Vector3> generators,
                                  std::span<const VoronoiCellStats> stats);

} // namespace swarmsim
