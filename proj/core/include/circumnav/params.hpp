#pragma once

#include <complex>
#include <optional>

#include "circumnav/errors.hpp"

namespace circumnav {

/// Radii of the three concentric circles around the target: the desired
/// orbit C_d, the auxiliary circle C_a (control is zeroed inside it) and the
/// safety circle C_s (must never be entered). Construct via validate_radii().
///
/// Invariants (all strict):
///   r_d > r_a > r_s > 0,   r_d < r_s + r_a,   r_a^2 > r_d * r_s
struct RadiiTriple {
    double r_d;  // desired-circle radius [m]
    double r_a;  // auxiliary-circle radius [m]
    double r_s;  // safety-circle radius [m]
};

/// Validates the three-circle geometry. Throws RadiiError naming the first
/// violated inequality (ordering, then triangle, then geometric-mean), with
/// both sides of the failing comparison.
RadiiTriple validate_radii(double r_d, double r_a, double r_s);

/// Curvature gain k = 1/sqrt(r_d^2 - r_a^2) [1/m]. At the desired orbit this
/// makes the commanded turn rate exactly -V/r_d.
double compute_gain_k(const RadiiTriple& radii);

/// beta = sqrt(r_d^2 - r_a^2)/r_a (dimensionless shape parameter).
double compute_beta(const RadiiTriple& radii);

/// Upper bound Delta on the admissible barrier half-width delta:
///   Delta = (1/beta) atan(beta) + ln(r_d/r_a) - r_s/r_a.
/// Any delta in (0, Delta] guarantees the safe entry-bearing condition.
/// For radii passing validate_radii, 0 < Delta < 1.
double compute_delta_bound(const RadiiTriple& radii);

/// Minimum bearing at which the robot may enter C_a without its straight
/// chord dipping inside C_s: asin(r_s/r_a), in (0, pi/2).
double min_safe_bearing(const RadiiTriple& radii);

/// Regime threshold for the turn-rate gain kappa: k*V*delta^2*exp(-2*W0).
/// kappa at or above it guarantees at most one entry into C_a; below it the
/// robot may (but need not) enter multiple times.
double kappa_threshold(double k, double v, double delta, double w0);

/// Controller design constants. Build via make_design_params(), which derives
/// k and beta from the radii and enforces delta in (0, Delta] and kappa > 0.
struct DesignParams {
    RadiiTriple radii;
    double v;      // constant forward speed [m/s]
    double k;      // curvature gain [1/m]
    double beta;   // dimensionless
    double delta;  // barrier half-width, in (0, Delta]
    double kappa;  // turn-rate gain [rad/s]
};

/// delta = nullopt picks the default 0.9 * Delta. delta = Delta exactly is
/// accepted; the entry-bearing guarantee then holds with equality only in
/// exact arithmetic.
DesignParams make_design_params(const RadiiTriple& radii, double v,
                                std::optional<double> delta, double kappa);

/// Everything the design pipeline derives for a given configuration. The
/// kappa_threshold and omega_bound entries depend on the initial condition
/// through W0 and are NaN when the start lies outside the admissible set.
struct DesignReport {
    double k;
    double beta;
    double delta_bound;       // Delta
    double delta;             // resolved value actually in use
    double min_safe_bearing;  // [rad]
    double eta0;              // eta at t = 0 (NaN if not applicable)
    double w0;                // W(eta0) (NaN if eta0 >= delta)
    double kappa_threshold;   // [rad/s]
    double omega_bound;       // [rad/s]
    std::complex<double> eigenvalues[2];
    double convergence_rate;  // [1/s]
};

}  // namespace circumnav
