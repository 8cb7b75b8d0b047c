#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "swarmsim/lloyd.hpp"
#include "swarmsim/region.hpp"
#include "swarmsim/rng.hpp"

namespace swarmsim {
namespace {

BarrierRegion unit_square() {
    BarrierRegion r;
    r.kind = RegionKind::PlanarBox;
    r.center = {0.5, 0.5, 0.0};
    r.half_extents = {0.5, 0.5, 0.0};
    return r;
}

BarrierRegion unit_segment() {
    BarrierRegion r;
    r.kind = RegionKind::PlanarBox;
    r.center = {0.5, 0.0, 0.0};
    r.half_extents = {0.5, 0.0, 0.0};
    return r;
}

TEST(LloydConfigTest, ValidatesWeightConstraints) {
    LloydConfig c;
    c.count = 4;
    EXPECT_TRUE(c.validate().empty());
    EXPECT_EQ(c.resolved_samples(), 800u);
    c.q_samples = 123;
    EXPECT_EQ(c.resolved_samples(), 123u);

    LloydConfig bad_sum = c;
    bad_sum.alpha1 = 0.5;  // alpha1 + alpha2 must stay 1
    EXPECT_FALSE(bad_sum.validate().empty());

    LloydConfig zero_alpha2 = c;
    zero_alpha2.alpha1 = 1.0;
    zero_alpha2.alpha2 = 0.0;  // the sample mean must keep nonzero weight
    EXPECT_FALSE(zero_alpha2.validate().empty());

    LloydConfig bad_beta = c;
    bad_beta.beta1 = 0.7;
    bad_beta.beta2 = 0.2;
    EXPECT_FALSE(bad_beta.validate().empty());

    LloydConfig no_points = c;
    no_points.count = 0;
    EXPECT_FALSE(no_points.validate().empty());
}

TEST(LloydUpdateTest, WeightedBlendMatchesHandValue) {
    // ((a1 j + b1) / (j + 1)) x + ((a2 j + b2) / (j + 1)) u at j = 3 with
    // a = (0.7, 0.3), b = (0.4, 0.6), x = 2, u = 10:
    // (2.5 / 4) * 2 + (1.5 / 4) * 10 = 5.
    LloydConfig c;
    c.alpha1 = 0.7;
    c.alpha2 = 0.3;
    c.beta1 = 0.4;
    c.beta2 = 0.6;
    const Vector3 out = lloyd_point_update({2, 0, 0}, {10, 0, 0}, 3, c);
    EXPECT_DOUBLE_EQ(out.x, 5.0);
    EXPECT_DOUBLE_EQ(out.y, 0.0);
    EXPECT_DOUBLE_EQ(out.z, 0.0);
}

TEST(LloydUpdateTest, DefaultWeightsJumpToTheSampleMean) {
    const LloydConfig c;  // alpha2 = beta2 = 1
    for (std::uint64_t j : {std::uint64_t{1}, std::uint64_t{5}, std::uint64_t{77}}) {
        const Vector3 out = lloyd_point_update({-3, 9, 1}, {2.5, -1, 0}, j, c);
        EXPECT_DOUBLE_EQ(out.x, 2.5);
        EXPECT_DOUBLE_EQ(out.y, -1.0);
        EXPECT_DOUBLE_EQ(out.z, 0.0);
    }
}

TEST(AssignTest, NearestGeneratorWins) {
    const std::vector<Vector3> gens{{0, 0, 0}, {10, 0, 0}};
    const std::vector<Vector3> samples{{1, 0, 0}, {9, 0, 0}, {4.9, 0, 0}, {5.1, 0, 0}};
    const auto a = assign_to_nearest(samples, gens);
    ASSERT_EQ(a.size(), 4u);
    EXPECT_EQ(a[0], 0u);
    EXPECT_EQ(a[1], 1u);
    EXPECT_EQ(a[2], 0u);
    EXPECT_EQ(a[3], 1u);
}

TEST(AssignTest, TiesResolveToTheLowestIndex) {
    const std::vector<Vector3> gens{{0, 0, 0}, {10, 0, 0}, {0, 0, 0}};
    const std::vector<Vector3> samples{{5, 0, 0}, {0, 0, 0}};
    const auto a = assign_to_nearest(samples, gens);
    EXPECT_EQ(a[0], 0u);  // equidistant between 0 and 1
    EXPECT_EQ(a[1], 0u);  // generators 0 and 2 coincide
}

TEST(CellStatsTest, CountsAndMeans) {
    const std::vector<Vector3> samples{{1, 0, 0}, {3, 0, 0}, {10, 2, 0}};
    const std::vector<std::size_t> assignment{0, 0, 1};
    const auto stats = cell_stats(samples, assignment, 3);
    ASSERT_EQ(stats.size(), 3u);
    EXPECT_EQ(stats[0].count, 2u);
    EXPECT_DOUBLE_EQ(stats[0].mean.x, 2.0);
    EXPECT_EQ(stats[1].count, 1u);
    EXPECT_DOUBLE_EQ(stats[1].mean.x, 10.0);
    EXPECT_DOUBLE_EQ(stats[1].mean.y, 2.0);
    EXPECT_EQ(stats[2].count, 0u);
}

TEST(CoverageCostTest, HandValueOnThreeSamples) {
    // Generators {0.25, 0.75} against samples {0, 0.5, 1}: every sample sits
    // 0.25 away from its nearest generator, so the mean squared cost is
    // exactly 0.0625.
    const std::vector<Vector3> gens{{0.25, 0, 0}, {0.75, 0, 0}};
    const std::vector<Vector3> samples{{0, 0, 0}, {0.5, 0, 0}, {1, 0, 0}};
    EXPECT_DOUBLE_EQ(coverage_cost(gens, samples), 0.0625);
}

TEST(CoverageCostTest, CenteredGeneratorOnTheUnitSquare) {
    // Mean squared distance from a uniform unit square to its center is
    // exactly 1/6; the Monte Carlo estimate at 1e5 samples has SE ~ 3.3e-4.
    const BarrierRegion r = unit_square();
    std::mt19937_64 g(derive_seed(21, 0));
    const auto samples = sample_region(r, DensityField::uniform(), 100000, g);
    const std::vector<Vector3> gens{{0.5, 0.5, 0.0}};
    EXPECT_NEAR(coverage_cost(gens, samples), 1.0 / 6.0, 0.005);
}

TEST(CvtGradientTest, MassWeightedOffsetToTheCellMean) {
    const std::vector<Vector3> gens{{0.2, 0, 0}, {0.9, 0, 0}};
    const std::vector<Vector3> samples{{0, 0, 0}, {1, 0, 0}};
    const auto assignment = assign_to_nearest(samples, gens);
    const auto stats = cell_stats(samples, assignment, gens.size());
    const auto grad = cvt_gradient(gens, stats);
    ASSERT_EQ(grad.size(), 2u);
    EXPECT_DOUBLE_EQ(grad[0].x, -0.2);
    EXPECT_DOUBLE_EQ(grad[1].x, 0.1);
}

TEST(CvtGradientTest, EmptyCellGetsZero) {
    const std::vector<Vector3> gens{{0, 0, 0}, {5, 0, 0}};
    const std::vector<Vector3> samples{{0.1, 0, 0}};
    const auto stats = cell_stats(samples, assign_to_nearest(samples, gens), 2);
    const auto grad = cvt_gradient(gens, stats);
    EXPECT_EQ(grad[1], (Vector3{0, 0, 0}));
}

TEST(LloydRunTest, SinglePointFindsTheBoxCenter) {
    LloydConfig c;
    c.count = 1;
    c.q_samples = 20000;
    c.max_iterations = 30;
    c.seed = 5;
    const LloydResult res = lloyd_run(unit_square(), DensityField::uniform(), c);
    ASSERT_EQ(res.points.size(), 1u);
    // Per-axis SE of one iteration's mean is ~0.002; 0.01 is a 5 sigma band.
    EXPECT_NEAR(res.points[0].x, 0.5, 0.01);
    EXPECT_NEAR(res.points[0].y, 0.5, 0.01);
    EXPECT_EQ(res.points[0].z, 0.0);
    // The lone cell captures every sample, so its counter advances each
    // iteration from its initial value of 1.
    EXPECT_EQ(res.counters[0], static_cast<std::uint64_t>(res.iterations) + 1);
    EXPECT_EQ(res.final_stats[0].count, 20000u);
}

TEST(LloydRunTest, TwoPointsOnTheUnitSegment) {
    LloydConfig c;
    c.count = 2;
    c.q_samples = 4000;
    c.max_iterations = 100;
    c.seed = 9;
    const LloydResult res = lloyd_run(unit_segment(), DensityField::uniform(), c);
    ASSERT_EQ(res.points.size(), 2u);
    std::vector<double> xs{res.points[0].x, res.points[1].x};
    std::sort(xs.begin(), xs.end());
    // The optimal pair on a uniform unit segment is {1/4, 3/4}.
    EXPECT_NEAR(xs[0], 0.25, 0.03);
    EXPECT_NEAR(xs[1], 0.75, 0.03);
    for (const Vector3& p : res.points) {
        EXPECT_EQ(p.y, 0.0);
        EXPECT_EQ(p.z, 0.0);
    }
}

TEST(LloydRunTest, EmptyCellSkipsUpdateAndCounter) {
    // Two exactly coincident generators: the tie rule sends every sample to
    // index 0, so in the first iteration index 1 has an empty cell and must
    // keep both its position and its counter. (They separate afterwards, so
    // pin a single iteration.)
    LloydConfig c;
    c.count = 2;
    c.q_samples = 500;
    c.max_iterations = 1;
    std::mt19937_64 g(derive_seed(33, 0));
    const Vector3 start{0.3, 0.4, 0.0};
    const LloydResult res =
        lloyd_run(unit_square(), DensityField::uniform(), c, {start, start}, g);
    EXPECT_EQ(res.points[1], start);
    EXPECT_EQ(res.counters[1], 1u);
    EXPECT_EQ(res.counters[0], 2u);
    EXPECT_FALSE(res.points[0] == start);  // the survivor moved to its mean
    EXPECT_EQ(res.final_stats[0].count, 500u);
    EXPECT_EQ(res.final_stats[1].count, 0u);
}

TEST(LloydRunTest, InitialPointsAreProjectedIntoTheRegion) {
    // Both start points sit far outside and land on the same corner after
    // projection; the starved one is still there after the only iteration,
    // which is exactly the projected location.
    LloydConfig c;
    c.count = 2;
    c.q_samples = 100;
    c.max_iterations = 1;
    std::mt19937_64 g(derive_seed(33, 1));
    const LloydResult res = lloyd_run(unit_square(), DensityField::uniform(), c,
                                      {{9.0, -2.0, 7.0}, {9.0, -2.0, 7.0}}, g);
    EXPECT_EQ(res.points[1], (Vector3{1.0, 0.0, 0.0}));
    EXPECT_EQ(res.iterations, 1u);
}

TEST(LloydRunTest, DeterministicForAFixedSeed) {
    LloydConfig c;
    c.count = 6;
    c.max_iterations = 25;
    c.seed = 77;
    const LloydResult a = lloyd_run(unit_square(), DensityField::uniform(), c);
    const LloydResult b = lloyd_run(unit_square(), DensityField::uniform(), c);
    ASSERT_EQ(a.points.size(), b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        EXPECT_EQ(a.points[i], b.points[i]);  // bitwise
        EXPECT_EQ(a.counters[i], b.counters[i]);
    }
    EXPECT_EQ(a.iterations, b.iterations);

    LloydConfig other = c;
    other.seed = 78;
    const LloydResult e = lloyd_run(unit_square(), DensityField::uniform(), other);
    bool any_diff = false;
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        if (!(a.points[i] == e.points[i])) any_diff = true;
    }
    EXPECT_TRUE(any_diff);
}

TEST(LloydRunTest, ObserverSeesEveryIteration) {
    LloydConfig c;
    c.count = 3;
    c.q_samples = 600;
    c.max_iterations = 12;
    c.seed = 4;
    std::vector<std::size_t> indices;
    std::vector<Vector3> last_seen;
    const LloydResult res = lloyd_run(
        unit_square(), DensityField::uniform(), c,
        [&](std::size_t iter, std::span<const Vector3> pts) {
            indices.push_back(iter);
            last_seen.assign(pts.begin(), pts.end());
        });
    ASSERT_EQ(indices.size(), res.iterations);
    for (std::size_t k = 0; k < indices.size(); ++k) {
        EXPECT_EQ(indices[k], k + 1);  // 1-based, contiguous
    }
    ASSERT_EQ(last_seen.size(), res.points.size());
    for (std::size_t i = 0; i < last_seen.size(); ++i) {
        EXPECT_EQ(last_seen[i], res.points[i]);
    }
}

TEST(LloydRunTest, CostDescendsOnAFixedEvaluationSet) {
    // Evaluate every iterate against one frozen sample set; the cost must
    // fall overall and never step up by more than a Monte Carlo ripple.
    const BarrierRegion r = unit_square();
    std::mt19937_64 g(derive_seed(55, 0));
    const auto eval_set = sample_region(r, DensityField::uniform(), 50000, g);

    LloydConfig c;
    c.count = 8;
    c.q_samples = 5000;
    c.max_iterations = 60;
    c.seed = 13;
    std::vector<double> costs;
    lloyd_run(r, DensityField::uniform(), c,
              [&](std::size_t, std::span<const Vector3> pts) {
                  costs.push_back(coverage_cost(pts, eval_set));
              });
    ASSERT_GE(costs.size(), 5u);
    EXPECT_LT(costs.back(), 0.9 * costs.front());
    for (std::size_t k = 1; k < costs.size(); ++k) {
        EXPECT_LE(costs[k], costs[k - 1] + 0.02 * costs.front());
    }
}

TEST(LloydRunTest, WeightedDensityPullsPointsTowardTheMass) {
    // With weight x on the unit square the generators' mean x must sit
    // clearly right of 0.5 (the uniform answer).
    LloydConfig c;
    c.count = 4;
    c.q_samples = 4000;
    c.max_iterations = 60;
    c.seed = 3;
    const DensityField d =
        DensityField::weighted([](const Vector3& p) { return p.x; }, 1.0);
    const LloydResult res = lloyd_run(unit_square(), d, c);
    double mx = 0.0;
    for (const Vector3& p : res.points) mx += p.x;
    EXPECT_GT(mx / 4.0, 0.54);
}

}  // namespace
}  // namespace swarmsim
