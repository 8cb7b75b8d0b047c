#include "swarmsim/region.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "swarmsim/rng.hpp"

namespace swarmsim {

namespace {

double axis_of(const Vector3& v, int axis) {
    switch (axis) {
        case 0: return v.x;
        case 1: return v.y;
        default: return v.z;
    }
}

void set_axis(Vector3& v, int axis, double value) {
    switch (axis) {
        case 0: v.x = value; break;
        case 1: v.y = value; break;
        default: v.z = value; break;
    }
}

} // namespace

bool BarrierRegion::axis_active(int axis) const {
    if (kind == RegionKind::PlanarBox && axis == 2) return false;
    return axis_of(half_extents, axis) > 0.0;
}

int BarrierRegion::active_dims() const {
    int n = 0;
    for (int a = 0; a < 3; ++a) n += axis_active(a) ? 1 : 0;
    return n;
}

bool BarrierRegion::contains(const Vector3& p) const {
    for (int a = 0; a < 3; ++a) {
        const double c = axis_of(center, a);
        const double h = axis_active(a) ? axis_of(half_extents, a) : 0.0;
        const double d = std::abs(axis_of(p, a) - c);
        if (d > h + 1e-12) return false;
    }
    return true;
}

std::vector<std::string> BarrierRegion::validate() const {
    std::vector<std::string> out;
    if (!is_finite(center) || !is_finite(half_extents) || !is_finite(velocity)) {
        out.push_back("region: center, half_extents, and velocity must be finite");
    }
    if (half_extents.x < 0.0 || half_extents.y < 0.0 || half_extents.z < 0.0) {
        out.push_back("region: half_extents must be nonnegative");
    }
    if (kind == RegionKind::PlanarBox && half_extents.z != 0.0) {
        out.push_back("region: a planar region must have zero z half-extent");
    }
    if (active_dims() == 0) {
        out.push_back("region: at least one dimension must have a positive half-extent");
    }
    return out;
}

Vector3 project_into(const BarrierRegion& region, const Vector3& p) {
    Vector3 out = p;
    for (int a = 0; a < 3; ++a) {
        const double c = axis_of(region.center, a);
        if (!region.axis_active(a)) {
            set_axis(out, a, c);
        } else {
            const double h = axis_of(region.half_extents, a);
            set_axis(out, a, std::clamp(axis_of(p, a), c - h, c + h));
        }
    }
    return out;
}

DensityField DensityField::weighted(std::function<double(const Vector3&)> w, double bound) {
    if (!(bound > 0.0)) throw std::invalid_argument("DensityField: bound must be positive");
    DensityField f;
    f.weight = std::move(w);
    f.bound = bound;
    f.is_uniform = false;
    return f;
}

std::vector<Vector3> sample_region(const BarrierRegion& region, const DensityField& density,
                                   std::size_t count, std::mt19937_64& rng) {
    const auto violations = region.validate();
    if (!violations.empty()) {
        throw std::invalid_argument("sample_region: " + violations.front());
    }

    std::vector<Vector3> out;
    out.reserve(count);
    std::uint64_t proposals = 0;
    std::uint64_t accepted = 0;

    while (out.size() < count) {
        Vector3 q = region.center;
        for (int a = 0; a < 3; ++a) {
            if (!region.axis_active(a)) continue;
            const double c = axis_of(region.center, a);
            const double h = axis_of(region.half_extents, a);
            set_axis(q, a, uniform_in(rng, c - h, c + h));
        }
        ++proposals;
        bool accept = true;
        if (!density.is_uniform) {
            const double w = density.weight ? density.weight(q) : 1.0;
            if (w < 0.0) throw std::domain_error("sample_region: negative density weight");
            accept = w > uniform01(rng) * density.bound;
        }
        if (accept) {
            out.push_back(q);
            ++accepted;
        }
        if (proposals % 1000000 == 0 &&
            static_cast<double>(accepted) < 0.001 * static_cast<double>(proposals)) {
            throw std::runtime_error(
                "sample_region: rejection sampling stalled (acceptance below 0.1% over 1e6 proposals)");
        }
    }
    return out;
}

} // namespace swarmsim
