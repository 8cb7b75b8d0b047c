#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace swarmsim {

// All randomness flows through mt19937_64 (bit-exact by the C++ standard)
// plus the helpers below. std::uniform_real_distribution and friends are
// implementation-defined and must not be used anywhere results are logged.

/// splitmix64 mix of (seed, stream); used to derive independent stream seeds
/// from one master seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + stream * 0x9E3779B97F4A7C15ULL + 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Uniform double in [0, 1) from the top 53 bits of one generator draw.
inline double uniform01(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

/// Uniform double in [lo, hi); one draw.
inline double uniform_in(std::mt19937_64& g, double lo, double hi) {
    return lo + (hi - lo) * uniform01(g);
}

/// One standard normal pair via the Marsaglia polar method. Each attempt
/// consumes exactly two uniform draws; attempts repeat until the pair lands
/// inside the unit disc.
inline void normal_pair(std::mt19937_64& g, double& z0, double& z1) {
    for (;;) {
        const double u = 2.0 * uniform01(g) - 1.0;
        const double v = 2.0 * uniform01(g) - 1.0;
        const double s = u * u + v * v;
        if (s > 0.0 && s < 1.0) {
            const double k = std::sqrt(-2.0 * std::log(s) / s);
            z0 = u * k;
            z1 = v * k;
            return;
        }
    }
}

} // namespace swarmsim
