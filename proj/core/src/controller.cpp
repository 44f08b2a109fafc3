#include "circumnav/controller.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace circumnav {

namespace {
constexpr double nan = std::numeric_limits<double>::quiet_NaN();

// sqrt(r^2 - r_a^2), clamped against tiny negative arguments from rounding
// when r == r_a.
double chord_leg(double r, double r_a) {
    return std::sqrt(std::max(0.0, r * r - r_a * r_a));
}
}  // namespace

double phi(double r, const DesignParams& params) {
    const double r_a = params.radii.r_a;
    const double r_d = params.radii.r_d;
    if (r < r_a) {
        throw DomainError("phi: r < r_a is outside the domain of definition");
    }
    const double s = chord_leg(r, r_a);
    const double s_d = chord_leg(r_d, r_a);
    const double k = params.k;
    return k * (s - s_d) - k * r_a * (std::atan(s / r_a) - std::atan(s_d / r_a)) +
           std::log(r_d / r);
}

double eta(double r, double theta, const DesignParams& params) {
    return 1.0 - std::sin(theta) + phi(r, params);
}

double blf_value(double eta_val, double delta) {
    const double gap = delta * delta - eta_val * eta_val;
    if (!(gap > 0.0)) {
        throw BarrierBreach(eta_val, delta, nan);
    }
    return 0.5 * std::log(delta * delta / gap);
}

double omega(const PolarState& state, const DesignParams& params) {
    const double r = state.r;
    const double r_a = params.radii.r_a;
    if (r < r_a) {
        return 0.0;
    }
    const double v = params.v;
    const double sin_th = std::sin(state.theta);
    const double e = eta(r, state.theta, params);
    const double gap = params.delta * params.delta - e * e;
    if (!(gap > 0.0)) {
        throw BarrierBreach(e, params.delta, nan);
    }
    return (v / r) * (1.0 - sin_th) - params.k * v * chord_leg(r, r_a) / r +
           params.kappa * std::cos(state.theta) / gap;
}

double omega_from_range(double r, double rdot, const DesignParams& params) {
    const double v = params.v;
    if (std::abs(rdot) > v) {
        throw DomainError("omega_from_range: |rdot| > V is kinematically impossible");
    }
    const double r_a = params.radii.r_a;
    if (r < r_a) {
        return 0.0;
    }
    const double sin_th = std::sqrt(v * v - rdot * rdot) / v;
    const double e = 1.0 - sin_th + phi(r, params);
    const double gap = params.delta * params.delta - e * e;
    if (!(gap > 0.0)) {
        throw BarrierBreach(e, params.delta, nan);
    }
    return (v / r) * (1.0 - sin_th) - params.k * v * chord_leg(r, r_a) / r -
           (params.kappa / v) * rdot / gap;
}

double omega_baseline(double r, double rdot, double k, double v, double r_a) {
    if (std::abs(rdot) > v) {
        throw DomainError("omega_baseline: |rdot| > V is kinematically impossible");
    }
    if (r < r_a) {
        return 0.0;
    }
    return k * (-v * chord_leg(r, r_a) / r - rdot);
}

double estimate_range_rate(double r_now, double r_prev, double dt, double v) {
    if (!(dt > 0.0)) {
        throw DomainError("estimate_range_rate: sample period must be positive");
    }
    return std::clamp((r_now - r_prev) / dt, -v, v);
}

double eta_tight_bound(double delta, double w0) {
    return delta * std::sqrt(1.0 - std::exp(-2.0 * w0));
}

double omega_bound(const DesignParams& params, double w0) {
    return params.v * (params.k + 1.0 / params.radii.r_a) +
           params.kappa * std::exp(2.0 * w0) / (params.delta * params.delta);
}

ControllerState::ControllerState(ControllerMode mode, const DesignParams& params, double eta0,
                                 double rdot0)
    : mode_(mode), params_(params), eta0_(eta0), w0_(nan), estimator_(rdot0) {
    if (mode_ != ControllerMode::Baseline) {
        w0_ = blf_value(eta0_, params_.delta);  // throws if eta0 >= delta
    }
}

double ControllerState::turn_rate(const PolarState& state, double dt, double t) {
    try {
        switch (mode_) {
            case ControllerMode::BlfState:
                return omega(state, params_);
            case ControllerMode::BlfRangeOnly: {
                const double rdot = estimator_.update(state.r, dt, params_.v);
                return omega_from_range(state.r, rdot, params_);
            }
            case ControllerMode::Baseline: {
                const double rdot = -params_.v * std::cos(state.theta);
                return omega_baseline(state.r, rdot, params_.k, params_.v, params_.radii.r_a);
            }
        }
    } catch (const BarrierBreach& b) {
        throw BarrierBreach(b.eta, b.delta, t);  // re-stamp with the simulation time
    }
    throw DomainError("unreachable controller mode");
}

}  // namespace circumnav
