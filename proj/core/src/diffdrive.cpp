#include "circumnav/diffdrive.hpp"

#include <cmath>

namespace circumnav {

WheelCommand wheel_speeds(double v, double omega, const DriveGeometry& geom) {
    if (!(v >= 0.0)) {
        throw DomainError("wheel_speeds: V must be nonnegative");
    }
    const double v_r = v + 0.5 * omega * geom.d_w;
    const double v_l = v - 0.5 * omega * geom.d_w;
    const bool sat = std::abs(v_r) > geom.v_wheel_max || std::abs(v_l) > geom.v_wheel_max;
    return {v_r, v_l, sat};
}

double max_feasible_omega(double v, const DriveGeometry& geom) {
    if (!(v < geom.v_wheel_max)) {
        throw DomainError("max_feasible_omega: V >= v_wheel_max leaves no turning authority");
    }
    return 2.0 * (geom.v_wheel_max - v) / geom.d_w;
}

}  // namespace circumnav
