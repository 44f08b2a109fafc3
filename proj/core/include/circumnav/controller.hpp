#pragma once

#include "circumnav/dynamics.hpp"
#include "circumnav/params.hpp"

namespace circumnav {

enum class ControllerMode {
    BlfState,      // barrier controller fed the exact (r, theta) state
    BlfRangeOnly,  // barrier controller fed r and a finite-difference rdot
    Baseline,      // prior range-based controller without the safety barrier
};

/// Radial potential phi(r) >= 0 with its unique zero at r = r_d, evaluated
/// in closed form:
///   phi(r) = k[s(r) - s(r_d)] - k r_a [atan(s(r)/r_a) - atan(s(r_d)/r_a)]
///            + ln(r_d/r),            s(x) = sqrt(x^2 - r_a^2).
/// Defined for r >= r_a only; throws DomainError below that.
double phi(double r, const DesignParams& params);

/// Equilibrium-characterizing function eta = 1 - sin(theta) + phi(r).
/// Nonnegative, zero exactly at (r_d, pi/2).
double eta(double r, double theta, const DesignParams& params);

/// Barrier value W = 0.5 ln(delta^2 / (delta^2 - eta^2)). Throws
/// BarrierBreach when eta_val >= delta.
double blf_value(double eta_val, double delta);

/// Barrier turn-rate law in (r, theta) form:
///   omega = (V/r)(1 - sin theta) - kV sqrt(r^2 - r_a^2)/r
///           + kappa cos(theta) / (delta^2 - eta^2)      for r >= r_a,
///   omega = 0                                           for r < r_a.
/// cos(asin(r_a/r)) is evaluated as sqrt(r^2 - r_a^2)/r, which is exact on
/// r >= r_a and stable near r = r_a. Throws BarrierBreach if eta >= delta.
double omega(const PolarState& state, const DesignParams& params);

/// Same control law written in terms of the measurements (r, rdot) only,
/// recovering sin(theta) as sqrt(V^2 - rdot^2)/V. Identical to omega() for
/// theta in (0, pi); for theta in (pi, 2*pi) the two differ because the
/// positive square root picks the wrong branch, so range-only operation is
/// only meaningful on (0, pi). Throws DomainError when |rdot| > V.
double omega_from_range(double r, double rdot, const DesignParams& params);

/// Prior circumnavigation law without the safety barrier:
///   omega = k[-V sqrt(r^2 - r_a^2)/r - rdot] for r >= r_a, else 0.
double omega_baseline(double r, double rdot, double k, double v, double r_a);

/// Euler range-rate estimate (r_now - r_prev)/dt clamped to [-V, V]. The
/// clamp absorbs finite-difference overshoot; an exact measurement never
/// needs it. Throws DomainError when dt <= 0.
double estimate_range_rate(double r_now, double r_prev, double dt, double v);

/// Tight invariant bound on eta along a trajectory starting with barrier
/// value w0: delta * sqrt(1 - exp(-2*w0)).
double eta_tight_bound(double delta, double w0);

/// Uniform turn-rate bound V(k + 1/r_a) + kappa exp(2*w0)/delta^2, valid for
/// every trajectory that starts inside the admissible set.
double omega_bound(const DesignParams& params, double w0);

/// One-sample memory for the Euler range-rate estimator. The first update
/// returns the configured rdot(0) (default 0); subsequent updates return the
/// clamped finite difference.
class RangeRateEstimator {
public:
    explicit RangeRateEstimator(double rdot0 = 0.0) : rdot0_(rdot0) {}

    double update(double r_now, double dt, double v) {
        if (!primed_) {
            primed_ = true;
            prev_r_ = r_now;
            return rdot0_;
        }
        const double rdot = estimate_range_rate(r_now, prev_r_, dt, v);
        prev_r_ = r_now;
        return rdot;
    }

    void reset() { primed_ = false; }

private:
    double rdot0_;
    double prev_r_ = 0.0;
    bool primed_ = false;
};

/// Per-run controller state: the selected mode, the design constants, the
/// initial-condition quantities eta0/W0 the bounds depend on, and the
/// range-rate estimator memory. Owned by exactly one simulation run.
class ControllerState {
public:
    /// eta0 is eta at t = 0; must satisfy eta0 < params.delta for the BLF
    /// modes (checked here, BarrierBreach otherwise). For Baseline mode
    /// eta0/W0 are not used and may be NaN.
    ControllerState(ControllerMode mode, const DesignParams& params, double eta0,
                    double rdot0 = 0.0);

    /// Turn rate for the current state. t is used only to stamp barrier
    /// breach errors. For BlfRangeOnly the bearing in `state` is ignored and
    /// rdot comes from the internal estimator; dt is the sample period.
    double turn_rate(const PolarState& state, double dt, double t);

    ControllerMode mode() const { return mode_; }
    const DesignParams& params() const { return params_; }
    double eta0() const { return eta0_; }
    double w0() const { return w0_; }

private:
    ControllerMode mode_;
    DesignParams params_;
    double eta0_;
    double w0_;
    RangeRateEstimator estimator_;
};

}  // namespace circumnav
