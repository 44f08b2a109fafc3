#pragma once

#include "circumnav/errors.hpp"

namespace circumnav {

/// Differential-drive geometry of the experimental platform.
struct DriveGeometry {
    double d_w = 0.1054;        // wheel separation [m]
    double v_wheel_max = 0.814; // per-wheel hardware speed limit [m/s]
};

/// Wheel speeds realizing a unicycle command. Values are never clipped; the
/// saturated flag reports whether either wheel exceeds the hardware limit so
/// the design pipeline can verify feasibility instead of silently distorting
/// the dynamics.
struct WheelCommand {
    double v_right;  // [m/s]
    double v_left;   // [m/s]
    bool saturated;
};

/// v_r = V + 0.5*omega*d_w, v_l = V - 0.5*omega*d_w.
WheelCommand wheel_speeds(double v, double omega, const DriveGeometry& geom);

/// Largest |omega| executable at speed V without exceeding the wheel limit:
/// 2*(v_wheel_max - V)/d_w. Throws DomainError when V >= v_wheel_max (no
/// turning authority left).
double max_feasible_omega(double v, const DriveGeometry& geom);

}  // namespace circumnav
