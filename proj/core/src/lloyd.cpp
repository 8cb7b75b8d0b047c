#include "swarmsim/lloyd.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "swarmsim/rng.hpp"

namespace swarmsim {

std::vector<std::string> LloydConfig::validate() const {
    std::vector<std::string> out;
    if (count < 1) out.push_back("lloyd: count must be at least 1");
    if (std::abs(alpha1 + alpha2 - 1.0) > 1e-12) out.push_back("lloyd: alpha1 + alpha2 must be 1");
    if (std::abs(beta1 + beta2 - 1.0) > 1e-12) out.push_back("lloyd: beta1 + beta2 must be 1");
    if (!(alpha2 > 0.0)) out.push_back("lloyd: alpha2 must be positive");
    if (!(beta2 > 0.0)) out.push_back("lloyd: beta2 must be positive");
    if (resolved_samples() < count) out.push_back("lloyd: q_samples must be at least count");
    if (max_iterations < 1) out.push_back("lloyd: max_iterations must be at least 1");
    if (!(movement_tolerance >= 0.0)) out.push_back("lloyd: movement_tolerance must be nonnegative");
    return out;
}

std::vector<std::size_t> assign_to_nearest(std::span<const Vector3> samples,
                                           std::span<const Vector3> generators) {
    if (generators.empty()) throw std::invalid_argument("assign_to_nearest: no generators");
    std::vector<std::size_t> out(samples.size());
    for (std::size_t s = 0; s < samples.size(); ++s) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t arg = 0;
        for (std::size_t g = 0; g < generators.size(); ++g) {
            const double d2 = norm_sq(samples[s] - generators[g]);
            if (d2 < best) {  // strict: equal distance keeps the lower index
                best = d2;
                arg = g;
            }
        }
        out[s] = arg;
    }
    return out;
}

std::vector<VoronoiCellStats> cell_stats(std::span<const Vector3> samples,
                                         std::span<const std::size_t> assignment, std::size_t n) {
    if (samples.size() != assignment.size()) {
        throw std::invalid_argument("cell_stats: samples/assignment size mismatch");
    }
    std::vector<VoronoiCellStats> stats(n);
    std::vector<Vector3> sums(n);
    for (std::size_t s = 0; s < samples.size(); ++s) {
        const std::size_t g = assignment[s];
        if (g >= n) throw std::out_of_range("cell_stats: assignment index out of range");
        sums[g] += samples[s];
        ++stats[g].count;
    }
    for (std::size_t g = 0; g < n; ++g) {
        if (stats[g].count > 0) {
            stats[g].mean = sums[g] * (1.0 / static_cast<double>(stats[g].count));
        }
    }
    return stats;
}

Vector3 lloyd_point_update(const Vector3& x, const Vector3& u, std::uint64_t j,
                           const LloydConfig& config) {
    const double jd = static_cast<double>(j);
    const double wx = (config.alpha1 * jd + config.beta1) / (jd + 1.0);
    const double wu = (config.alpha2 * jd + config.beta2) / (jd + 1.0);
    return wx * x + wu * u;
}

namespace {

LloydResult run_iteration(const BarrierRegion& region, const DensityField& density,
                          const LloydConfig& config, std::vector<Vector3> points,
                          std::mt19937_64& rng, const LloydObserver& observer) {
    LloydResult res;
    res.counters.assign(points.size(), 1);
    res.final_stats.assign(points.size(), {});

    const std::size_t q = config.resolved_samples();
    for (std::size_t iter = 1; iter <= config.max_iterations; ++iter) {
        const auto samples = sample_region(region, density, q, rng);
        const auto assignment = assign_to_nearest(samples, points);
        auto stats = cell_stats(samples, assignment, points.size());

        double max_move = 0.0;
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (stats[i].count == 0) continue;  // empty cell: point and counter stay put
            Vector3 next = lloyd_point_update(points[i], stats[i].mean, res.counters[i], config);
            next = project_into(region, next);
            max_move = std::max(max_move, norm(next - points[i]));
            points[i] = next;
            ++res.counters[i];
        }
        res.final_stats = std::move(stats);
        res.iterations = iter;
        if (observer) observer(iter, points);
        if (max_move < config.movement_tolerance) break;
    }

    res.points = std::move(points);
    return res;
}

} // namespace

LloydResult lloyd_run(const BarrierRegion& region, const DensityField& density,
                      const LloydConfig& config, const LloydObserver& observer) {
    const auto violations = config.validate();
    if (!violations.empty()) throw std::invalid_argument("lloyd_run: " + violations.front());

    std::mt19937_64 placement(derive_seed(config.seed, 0));
    auto points = sample_region(region, density, config.count, placement);
    std::mt19937_64 sampling(derive_seed(config.seed, 1));
    return run_iteration(region, density, config, std::move(points), sampling, observer);
}

LloydResult lloyd_run(const BarrierRegion& region, const DensityField& density,
                      const LloydConfig& config, std::vector<Vector3> initial_points,
                      std::mt19937_64& rng, const LloydObserver& observer) {
    const auto violations = config.validate();
    if (!violations.empty()) throw std::invalid_argument("lloyd_run: " + violations.front());
    if (initial_points.size() != config.count) {
        throw std::invalid_argument("lloyd_run: initial point count does not match config.count");
    }
    for (auto& p : initial_points) p = project_into(region, p);
    return run_iteration(region, density, config, std::move(initial_points), rng, observer);
}

double coverage_cost(std::span<const Vector3> generators, std::span<const Vector3> samples) {
    if (generators.empty()) throw std::invalid_argument("coverage_cost: no generators");
    if (samples.empty()) throw std::invalid_argument("coverage_cost: no samples");
    double total = 0.0;
    for (const auto& s : samples) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& g : generators) best = std::min(best, norm_sq(s - g));
        total += best;
    }
    return total / static_cast<double>(samples.size());
}

std::vector<Vector3> cvt_gradient(std::span<const Vector3> generators,
                                  std::span<const VoronoiCellStats> stats) {
    if (generators.size() != stats.size()) {
        throw std::invalid_argument("cvt_gradient: generators/stats size mismatch");
    }
    std::vector<Vector3> out(generators.size());
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (stats[i].count == 0) continue;
        out[i] = static_cast<double>(stats[i].count) * (stats[i].mean - generators[i]);
    }
    return out;
}

} // namespace swarmsim
