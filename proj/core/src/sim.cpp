#include "circumnav/sim.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace circumnav {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();
constexpr double pi = std::numbers::pi;
constexpr double convergence_r_tol = 0.01;               // fraction of r_d
constexpr double convergence_theta_tol = pi / 180.0;     // 1 degree
constexpr double entry_bearing_tol = 1e-3;               // [rad]

Pose rk4_step(const Pose& p, double v, double om, double dt) {
    auto f = [v, om](double psi) { return CartesianDeriv{v * std::cos(psi), v * std::sin(psi), om}; };
    const CartesianDeriv k1 = f(p.psi);
    const CartesianDeriv k2 = f(p.psi + 0.5 * dt * k1.dpsi);
    const CartesianDeriv k3 = f(p.psi + 0.5 * dt * k2.dpsi);
    const CartesianDeriv k4 = f(p.psi + dt * k3.dpsi);
    Pose next;
    next.x = p.x + dt / 6.0 * (k1.dx + 2.0 * k2.dx + 2.0 * k3.dx + k4.dx);
    next.y = p.y + dt / 6.0 * (k1.dy + 2.0 * k2.dy + 2.0 * k3.dy + k4.dy);
    next.psi = wrap_angle(p.psi + dt * om);  // psi-dot is exactly om under ZOH
    return next;
}

// Interpolated bearing at crossing fraction f of the step, unwrapped so the
// interpolation never jumps across the branch cut.
double interp_bearing(double theta_prev, double theta_next, double f) {
    return wrap_angle(theta_prev + f * angle_diff(theta_next, theta_prev));
}

}  // namespace

Crossing detect_events(double prev_r, double next_r, double r_a) {
    if (prev_r >= r_a && r_a > next_r) {
        return {CrossingKind::Entry, (prev_r - r_a) / (prev_r - next_r)};
    }
    if (prev_r < r_a && r_a <= next_r) {
        return {CrossingKind::Exit, (r_a - prev_r) / (next_r - prev_r)};
    }
    return {CrossingKind::None, 0.0};
}

EntryBearingReport entry_bearing_check(const Trajectory& trajectory, const RadiiTriple& radii) {
    EntryBearingReport report;
    const double min_bearing = min_safe_bearing(radii);
    const auto& s = trajectory.samples;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        const Crossing ev = detect_events(s[i].r, s[i + 1].r, radii.r_a);
        if (ev.kind != CrossingKind::Entry) continue;
        const double bearing = interp_bearing(s[i].theta, s[i + 1].theta, ev.fraction);
        report.bearings.push_back(bearing);
        if (bearing < min_bearing - entry_bearing_tol) {
            report.all_safe = false;
        }
    }
    return report;
}

double initial_bearing_from_pose(const Pose& pose, const TargetPosition& target) {
    return polar_from_cartesian(pose, target).theta;
}

std::pair<Trajectory, SimSummary> simulate(const SimConfig& config) {
    const DesignParams& params = config.params;
    const double r_a = params.radii.r_a;
    const double r_s = params.radii.r_s;
    const double r_d = params.radii.r_d;
    const double v = params.v;
    const double dt = config.dt;

    if (!(dt > 0.0)) throw DomainError("simulate: dt must be positive");
    if (!(config.t_final > dt)) throw DomainError("simulate: t_final must exceed dt");
    if (config.record_stride < 1) throw DomainError("simulate: record_stride must be >= 1");
    if (v * dt > r_a / 100.0) {
        throw DomainError("simulate: V*dt = " + std::to_string(v * dt) +
                          " exceeds r_a/100; reduce the step size");
    }

    const double dx0 = config.target.x - config.x0;
    const double dy0 = config.target.y - config.y0;
    const double r0 = std::hypot(dx0, dy0);
    if (!(r0 > 0.0)) throw InitialConditionError("initial position coincides with the target");
    const double gamma0 = wrap_angle(std::atan2(dy0, dx0));
    const double theta0 = wrap_angle(config.theta0);

    if (r0 < r_s) {
        throw InitialConditionError("initial range " + std::to_string(r0) +
                                    " is already inside the safety circle");
    }
    if (r0 < r_a && std::cos(theta0) > 0.0 && std::sin(theta0) < r_s / r0) {
        // Straight coasting from here crosses the safety circle before any
        // control can act; this start is rejected rather than simulated.
        throw InitialConditionError(
            "initial state inside the auxiliary circle is aimed into the safety circle "
            "(r0 = " + std::to_string(r0) + ", theta0 = " + std::to_string(theta0) + ")");
    }

    const bool blf = config.mode != ControllerMode::Baseline;
    if (blf && r0 < r_a) {
        throw InitialConditionError(
            "BLF modes require r(0) >= r_a; starts inside the auxiliary circle are "
            "only supported in baseline mode");
    }
    const double eta0 = r0 >= r_a ? eta(r0, theta0, params) : nan;
    const bool in_theta_set =
        r0 >= r_a && theta0 > 0.0 && theta0 < pi && eta0 < params.delta;
    if (!in_theta_set && !config.allow_outside_theta) {
        std::string why;
        if (r0 < r_a) {
            why = "r(0) < r_a";
        } else if (!(theta0 > 0.0 && theta0 < pi)) {
            why = "theta(0) outside (0, pi)";
        } else {
            why = "eta(0) = " + std::to_string(eta0) + " >= delta = " + std::to_string(params.delta);
        }
        throw InitialConditionError("initial condition outside the admissible set: " + why +
                                    " (set allow_outside_theta to run anyway)");
    }

    ControllerState controller = [&] {
        try {
            return ControllerState(config.mode, params, eta0, config.rdot0);
        } catch (const BarrierBreach& b) {
            throw BarrierBreach(b.eta, b.delta, 0.0);
        }
    }();

    const long n_steps = std::lround(config.t_final / dt);

    Trajectory trajectory;
    trajectory.config = config;
    trajectory.samples.reserve(static_cast<std::size_t>(n_steps / config.record_stride) + 8);

    SimSummary summary;
    summary.min_range = std::numeric_limits<double>::infinity();

    Pose pose{config.x0, config.y0, wrap_angle(theta0 + gamma0)};

    double last_recorded_t = -1.0;
    auto push_sample = [&](double t, double x, double y, double psi, double r, double theta,
                           double om, double e, double w, bool inside) {
        if (t <= last_recorded_t) return;
        trajectory.samples.push_back({t, x, y, psi, r, theta, om, e, w, inside});
        last_recorded_t = t;
    };

    long last_violation = -1;  // last step whose state breaks the convergence window
    double prev_eta = nan;
    bool prev_outside = false;
    double open_entry = nan;

    for (long i = 0; i <= n_steps; ++i) {
        const double t = static_cast<double>(i) * dt;
        const PolarState ps = polar_from_cartesian(pose, config.target);
        const double om = controller.turn_rate(ps, dt, t);
        const bool inside = ps.r < r_a;

        double e = nan;
        double w = nan;
        if (blf && !inside) {
            e = eta(ps.r, ps.theta, params);
            const double gap = params.delta * params.delta - e * e;
            if (!(gap > 0.0)) throw BarrierBreach(e, params.delta, t);
            w = 0.5 * std::log(params.delta * params.delta / gap);
        }

        if (ps.r < summary.min_range) {
            summary.min_range = ps.r;
            summary.min_range_time = t;
        }
        summary.max_abs_omega = std::max(summary.max_abs_omega, std::abs(om));
        if (std::abs(ps.r - r_d) >= convergence_r_tol * r_d ||
            std::abs(angle_diff(ps.theta, pi / 2.0)) >= convergence_theta_tol) {
            last_violation = i;
        }
        // The first range-only step runs on the seeded rdot(0), not a
        // measurement, so the monotonicity guarantee starts one step later.
        const bool estimator_warmup = config.mode == ControllerMode::BlfRangeOnly && i == 1;
        if (blf && !inside && prev_outside && !estimator_warmup) {
            if (e > prev_eta + 1e-6 * std::max(1.0, std::abs(prev_eta))) {
                summary.eta_monotone_outside_ca = false;
            }
        }
        prev_eta = e;
        prev_outside = blf && !inside;

        if (i % config.record_stride == 0 || i == n_steps) {
            push_sample(t, pose.x, pose.y, pose.psi, ps.r, ps.theta, om, e, w, inside);
        }
        if (i == n_steps) {
            summary.final_omega = om;
            break;
        }

        const Pose next = rk4_step(pose, v, om, dt);
        if (!std::isfinite(next.x) || !std::isfinite(next.y) || !std::isfinite(next.psi)) {
            throw Error("simulate: non-finite state at t = " + std::to_string(t + dt));
        }
        const PolarState ps_next = polar_from_cartesian(next, config.target);

        const Crossing ev = detect_events(ps.r, ps_next.r, r_a);
        if (ev.kind != CrossingKind::None) {
            const double tc = t + ev.fraction * dt;
            const double xc = pose.x + ev.fraction * (next.x - pose.x);
            const double yc = pose.y + ev.fraction * (next.y - pose.y);
            const double psic = wrap_angle(pose.psi + ev.fraction * dt * om);
            const double thetac = interp_bearing(ps.theta, ps_next.theta, ev.fraction);
            const double rc = ps.r + ev.fraction * (ps_next.r - ps.r);

            if (ev.kind == CrossingKind::Entry) {
                summary.entry_count += 1;
                summary.entry_bearings.push_back(thetac);
                open_entry = tc;
            } else if (!std::isnan(open_entry)) {
                summary.entry_intervals.push_back({open_entry, tc});
                open_entry = nan;
            }
            // An exit with no matching entry (run started inside C_a) only
            // happens under allow_outside_theta and is not an interval.

            double ec = nan;
            double wc = nan;
            if (blf && rc >= r_a) {
                ec = eta(std::max(rc, r_a), thetac, params);
                const double gap = params.delta * params.delta - ec * ec;
                wc = gap > 0.0 ? 0.5 * std::log(params.delta * params.delta / gap) : nan;
            }
            push_sample(tc, xc, yc, psic, rc, thetac, om, ec, wc, rc < r_a);
        }

        pose = next;
    }

    if (!std::isnan(open_entry)) {
        summary.entry_intervals.push_back({open_entry, nan});
    }

    summary.safety_violated = summary.min_range < r_s;
    if (last_violation < n_steps) {
        summary.converged = true;
        summary.convergence_time = static_cast<double>(last_violation + 1) * dt;
    } else {
        summary.converged = false;
        summary.convergence_time = nan;
    }

    return {std::move(trajectory), summary};
}

}  // namespace circumnav
