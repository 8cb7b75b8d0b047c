#pragma once

#include <cmath>
#include <stdexcept>

namespace swarmsim {

/// Norms below this are treated as zero when a direction is required.
inline constexpr double kZeroVectorEps = 1e-9;

struct Vector3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vector3& operator+=(const Vector3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vector3& operator-=(const Vector3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    Vector3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }

    friend Vector3 operator+(Vector3 a, const Vector3& b) { return a += b; }
    friend Vector3 operator-(Vector3 a, const Vector3& b) { return a -= b; }
    friend Vector3 operator*(Vector3 a, double s) { return a *= s; }
    friend Vector3 operator*(double s, Vector3 a) { return a *= s; }
    friend Vector3 operator-(const Vector3& a) { return {-a.x, -a.y, -a.z}; }
    friend bool operator==(const Vector3& a, const Vector3& b) {
        return a.x == b.x && a.y == b.y && a.z == b.z;
    }
};

inline double dot(const Vector3& a, const Vector3& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline Vector3 cross(const Vector3& a, const Vector3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm_sq(const Vector3& a) { return dot(a, a); }
inline double norm(const Vector3& a) { return std::sqrt(norm_sq(a)); }

inline bool is_finite(const Vector3& a) {
    return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

/// Angle in [0, pi] between two nonzero vectors. The cosine is clamped to
/// [-1, 1] before acos so near-parallel inputs cannot produce NaN.
inline double angle_between(const Vector3& a, const Vector3& b) {
    const double na = norm(a);
    const double nb = norm(b);
    if (na < kZeroVectorEps || nb < kZeroVectorEps) {
        throw std::domain_error("angle_between: zero-length vector");
    }
    double c = dot(a, b) / (na * nb);
    if (c > 1.0) c = 1.0;
    if (c < -1.0) c = -1.0;
    return std::acos(c);
}

} // namespace swarmsim
