#include "circumnav/dynamics.hpp"

#include <cmath>
#include <numbers>

namespace circumnav {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

double wrap_angle(double a) {
    double w = std::fmod(a, two_pi);
    if (w < 0.0) w += two_pi;
    // fmod can return exactly two_pi after the correction when a is a tiny
    // negative number
    if (w >= two_pi) w -= two_pi;
    return w;
}

double angle_diff(double a, double b) {
    double d = std::fmod(a - b, two_pi);
    if (d > std::numbers::pi) d -= two_pi;
    if (d <= -std::numbers::pi) d += two_pi;
    return d;
}

CartesianDeriv cartesian_derivatives(const Pose& pose, double v, double omega) {
    return {v * std::cos(pose.psi), v * std::sin(pose.psi), omega};
}

PolarDeriv polar_derivatives(const PolarState& state, double v, double omega) {
    if (!(state.r > 0.0)) {
        throw DomainError("polar_derivatives: r must be positive (LoS undefined at r = 0)");
    }
    return {-v * std::cos(state.theta), omega + v * std::sin(state.theta) / state.r};
}

PolarState polar_from_cartesian(const Pose& pose, const TargetPosition& target) {
    const double dx = target.x - pose.x;
    const double dy = target.y - pose.y;
    const double r = std::hypot(dx, dy);
    if (!(r > 0.0)) {
        throw DomainError("polar_from_cartesian: robot coincides with target");
    }
    const double gamma = wrap_angle(std::atan2(dy, dx));
    const double theta = wrap_angle(pose.psi - gamma);
    return {r, theta, gamma};
}

}  // namespace circumnav
