#pragma once

#include <array>

#include "swarmsim/vec3.hpp"

namespace swarmsim {

/// Row-major 3x3 rotation matrix.
struct RotationMatrix3 {
    std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

    double at(int r, int c) const { return m[static_cast<std::size_t>(r * 3 + c)]; }

    Vector3 apply(const Vector3& v) const {
        return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
                m[3] * v.x + m[4] * v.y + m[5] * v.z,
                m[6] * v.x + m[7] * v.y + m[8] * v.z};
    }

    friend Vector3 operator*(const RotationMatrix3& r, const Vector3& v) { return r.apply(v); }

    friend RotationMatrix3 operator*(const RotationMatrix3& a, const RotationMatrix3& b) {
        RotationMatrix3 out;
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) {
                double s = 0.0;
                for (int k = 0; k < 3; ++k) s += a.at(r, k) * b.at(k, c);
                out.m[static_cast<std::size_t>(r * 3 + c)] = s;
            }
        }
        return out;
    }

    RotationMatrix3 transposed() const {
        return {{m[0], m[3], m[6], m[1], m[4], m[7], m[2], m[5], m[8]}};
    }

    double determinant() const;

    static RotationMatrix3 identity() { return {}; }
};

/// Rotation about +z by alpha radians: (1,0,0) maps to (cos a, sin a, 0).
RotationMatrix3 rotation_z(double alpha);

/// Rotation about +y by alpha radians: (1,0,0) maps to (cos a, 0, -sin a),
/// (0,0,1) maps to (sin a, 0, cos a).
RotationMatrix3 rotation_y(double alpha);

/// Avoidance-turn schedule. Ramps linearly from 0 at dist = r_d up to pi/2 as
/// dist approaches r_s from above; exactly 0 outside the open interval
/// (r_s, r_d). Throws std::invalid_argument unless 0 < r_s < r_d.
double avoidance_angle(double dist, double r_s, double r_d);

} // namespace swarmsim
