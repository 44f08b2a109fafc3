#pragma once

#include "circumnav/errors.hpp"

namespace circumnav {

/// Wraps an angle to [0, 2*pi).
double wrap_angle(double a);

/// Signed difference a - b mapped to (-pi, pi].
double angle_diff(double a, double b);

/// World-frame robot pose. psi is the heading measured anticlockwise from
/// the +X axis, kept in [0, 2*pi).
struct Pose {
    double x;    // [m]
    double y;    // [m]
    double psi;  // [rad]
};

struct TargetPosition {
    double x;  // [m]
    double y;  // [m]
};

/// Robot-target engagement state. r is the line-of-sight range, theta the
/// bearing (heading measured anticlockwise from the LoS), gamma the LoS
/// reference angle, so psi = theta + gamma (mod 2*pi).
struct PolarState {
    double r;      // [m]
    double theta;  // [rad], in [0, 2*pi)
    double gamma;  // [rad], in [0, 2*pi)
};

struct CartesianDeriv {
    double dx;    // [m/s]
    double dy;    // [m/s]
    double dpsi;  // [rad/s]
};

struct PolarDeriv {
    double dr;      // [m/s]
    double dtheta;  // [rad/s]
};

/// Unicycle kinematics: (V cos psi, V sin psi, omega).
CartesianDeriv cartesian_derivatives(const Pose& pose, double v, double omega);

/// Engagement kinematics: dr = -V cos theta, dtheta = omega + V sin theta / r.
/// Throws DomainError at r = 0 (the LoS direction is undefined there).
PolarDeriv polar_derivatives(const PolarState& state, double v, double omega);

/// Derives (r, theta, gamma) from a pose and target position. gamma uses
/// atan2 of the robot-to-target displacement, so the quadrant is always
/// correct. Throws DomainError when the pose coincides with the target.
PolarState polar_from_cartesian(const Pose& pose, const TargetPosition& target);

}  // namespace circumnav
