#include "swarmsim/rotation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace swarmsim {

double RotationMatrix3::determinant() const {
    return m[0] * (m[4] * m[8] - m[5] * m[7]) -
           m[1] * (m[3] * m[8] - m[5] * m[6]) +
           m[2] * (m[3] * m[7] - m[4] * m[6]);
}

RotationMatrix3 rotation_z(double alpha) {
    const double c = std::cos(alpha);
    const double s = std::sin(alpha);
    return {{c, -s, 0.0,
             s, c, 0.0,
             0.0, 0.0, 1.0}};
}

RotationMatrix3 rotation_y(double alpha) {
    const double c = std::cos(alpha);
    const double s = std::sin(alpha);
    return {{c, 0.0, s,
             0.0, 1.0, 0.0,
             -s, 0.0, c}};
}

double avoidance_angle(double dist, double r_s, double r_d) {
    if (!(r_s > 0.0) || !(r_s < r_d)) {
        throw std::invalid_argument("avoidance_angle: requires 0 < r_s < r_d");
    }
    if (dist > r_s && dist < r_d) {
        return (std::numbers::pi / 2.0) * (r_d - dist) / (r_d - r_s);
    }
    return 0.0;
}

} // namespace swarmsim
