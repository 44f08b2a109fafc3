#include "circumnav/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace circumnav {

namespace {
constexpr double nan = std::numeric_limits<double>::quiet_NaN();
constexpr double inf = std::numeric_limits<double>::infinity();
constexpr double pi = std::numbers::pi;
constexpr double theta_range_tol = 1e-6;          // [rad]
constexpr double entry_bearing_tol = 1e-3;        // [rad]
constexpr double convergence_r_tol = 0.01;        // fraction of r_d
constexpr double convergence_theta_tol = pi / 180.0;
}  // namespace

LinearizationResult linearize(const DesignParams& params) {
    const double v = params.v;
    const double k = params.k;
    const double kappa = params.kappa;
    const double d2 = params.delta * params.delta;

    LinearizationResult res;
    res.a11 = 0.0;
    res.a12 = v;
    res.a21 = -k * k * v;
    res.a22 = -kappa / d2;

    // Characteristic polynomial of A: lambda^2 + (kappa/delta^2) lambda + k^2 V^2.
    const double disc = kappa * kappa - 4.0 * k * k * d2 * d2 * v * v;
    if (disc < 0.0) {
        const double re = -kappa / (2.0 * d2);
        const double im = std::sqrt(-disc) / (2.0 * d2);
        res.lambda1 = {re, im};
        res.lambda2 = {re, -im};
        res.regime = DampingRegime::Underdamped;
    } else {
        const double root = std::sqrt(disc);
        res.lambda1 = {(-kappa + root) / (2.0 * d2), 0.0};
        res.lambda2 = {(-kappa - root) / (2.0 * d2), 0.0};
        res.regime = DampingRegime::CriticalOrOverdamped;
    }
    return res;
}

double local_convergence_rate(const LinearizationResult& result) {
    return std::min(-result.lambda1.real(), -result.lambda2.real());
}

namespace {

// Convergence window start recomputed from the recorded samples, so the
// audit is self-contained (usable offline on a stored trajectory).
double convergence_time_of(const std::vector<TrajectorySample>& s, double r_d) {
    std::ptrdiff_t last_violation = -1;
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(s.size()); ++i) {
        if (std::abs(s[i].r - r_d) >= convergence_r_tol * r_d ||
            std::abs(angle_diff(s[i].theta, pi / 2.0)) >= convergence_theta_tol) {
            last_violation = i;
        }
    }
    if (last_violation + 1 >= static_cast<std::ptrdiff_t>(s.size())) return nan;
    return s[last_violation + 1].t;
}

}  // namespace

InvariantReport audit(const Trajectory& trajectory, const DesignParams& params, double w0) {
    const auto& s = trajectory.samples;
    const bool blf = trajectory.config.mode != ControllerMode::Baseline;
    InvariantReport report;

    // barrier: eta < delta wherever eta is defined
    {
        InvariantCheck c{"barrier", CheckStatus::NotApplicable, inf, nan, ""};
        if (blf) {
            for (const auto& p : s) {
                if (std::isnan(p.eta)) continue;
                const double margin = params.delta - p.eta;
                if (margin < c.worst_margin) {
                    c.worst_margin = margin;
                    c.worst_time = p.t;
                }
            }
            c.status = c.worst_margin > 0.0 ? CheckStatus::Pass : CheckStatus::Fail;
        } else {
            c.note = "eta is not defined for the baseline controller";
        }
        report.checks.push_back(std::move(c));
    }

    // eta_monotone: consecutive samples both outside C_a
    {
        InvariantCheck c{"eta_monotone", CheckStatus::NotApplicable, inf, nan, ""};
        if (blf) {
            // In range-only mode the first control step runs on the seeded
            // rdot(0) rather than a measurement; the guarantee starts after
            // the estimator is primed.
            const bool range_only = trajectory.config.mode == ControllerMode::BlfRangeOnly;
            for (std::size_t i = 0; i + 1 < s.size(); ++i) {
                if (range_only && i == 0) continue;
                if (s[i].inside_ca || s[i + 1].inside_ca) continue;
                if (std::isnan(s[i].eta) || std::isnan(s[i + 1].eta)) continue;
                const double tol = 1e-6 * std::max(1.0, std::abs(s[i].eta));
                const double margin = tol - (s[i + 1].eta - s[i].eta);
                if (margin < c.worst_margin) {
                    c.worst_margin = margin;
                    c.worst_time = s[i + 1].t;
                }
            }
            c.status = c.worst_margin >= 0.0 ? CheckStatus::Pass : CheckStatus::Fail;
        } else {
            c.note = "eta is not defined for the baseline controller";
        }
        report.checks.push_back(std::move(c));
    }

    // theta_range: theta in (tol, pi - tol) at every sample
    {
        InvariantCheck c{"theta_range", CheckStatus::Pass, inf, nan, ""};
        for (const auto& p : s) {
            const double margin = std::min(p.theta - theta_range_tol, pi - theta_range_tol - p.theta);
            if (margin < c.worst_margin) {
                c.worst_margin = margin;
                c.worst_time = p.t;
            }
        }
        c.status = c.worst_margin >= 0.0 ? CheckStatus::Pass : CheckStatus::Fail;
        report.checks.push_back(std::move(c));
    }

    // omega_bound: |omega| <= V(k + 1/r_a) + kappa e^{2W0}/delta^2
    {
        InvariantCheck c{"omega_bound", CheckStatus::NotApplicable, inf, nan, ""};
        if (blf && std::isfinite(w0)) {
            const double bound = omega_bound(params, w0);
            for (const auto& p : s) {
                const double margin = bound - std::abs(p.omega);
                if (margin < c.worst_margin) {
                    c.worst_margin = margin;
                    c.worst_time = p.t;
                }
            }
            c.status = c.worst_margin >= 0.0 ? CheckStatus::Pass : CheckStatus::Fail;
        } else {
            c.note = "bound requires W(eta(0)), undefined for this run";
        }
        report.checks.push_back(std::move(c));
    }

    // entry_bearing: every entry at bearing >= asin(r_s/r_a) - tol
    {
        InvariantCheck c{"entry_bearing", CheckStatus::Pass, inf, nan, ""};
        const auto eb = entry_bearing_check(trajectory, params.radii);
        const double min_bearing = min_safe_bearing(params.radii);
        for (const double b : eb.bearings) {
            const double margin = b - (min_bearing - entry_bearing_tol);
            if (margin < c.worst_margin) c.worst_margin = margin;
        }
        if (eb.bearings.empty()) c.note = "no auxiliary-circle entries";
        c.status = eb.all_safe ? CheckStatus::Pass : CheckStatus::Fail;
        report.checks.push_back(std::move(c));
    }

    // safety: r >= r_s at every sample, no tolerance
    {
        InvariantCheck c{"safety", CheckStatus::Pass, inf, nan, ""};
        for (const auto& p : s) {
            const double margin = p.r - params.radii.r_s;
            if (margin < c.worst_margin) {
                c.worst_margin = margin;
                c.worst_time = p.t;
            }
        }
        c.status = c.worst_margin >= 0.0 ? CheckStatus::Pass : CheckStatus::Fail;
        report.checks.push_back(std::move(c));
    }

    // steady_state_omega: clockwise (omega < 0) everywhere after convergence
    {
        InvariantCheck c{"steady_state_omega", CheckStatus::NotApplicable, inf, nan, ""};
        const double t_conv = convergence_time_of(s, params.radii.r_d);
        if (std::isnan(t_conv)) {
            c.note = "trajectory does not settle within the run";
        } else {
            for (const auto& p : s) {
                if (p.t < t_conv) continue;
                const double margin = -p.omega;
                if (margin < c.worst_margin) {
                    c.worst_margin = margin;
                    c.worst_time = p.t;
                }
            }
            c.status = c.worst_margin > 0.0 ? CheckStatus::Pass : CheckStatus::Fail;
        }
        report.checks.push_back(std::move(c));
    }

    return report;
}

DesignReport make_design_report(const DesignParams& params, double eta0) {
    DesignReport rep;
    rep.k = params.k;
    rep.beta = params.beta;
    rep.delta_bound = compute_delta_bound(params.radii);
    rep.delta = params.delta;
    rep.min_safe_bearing = min_safe_bearing(params.radii);
    rep.eta0 = eta0;
    if (std::isfinite(eta0) && eta0 < params.delta) {
        rep.w0 = blf_value(eta0, params.delta);
        rep.kappa_threshold = kappa_threshold(params.k, params.v, params.delta, rep.w0);
        rep.omega_bound = omega_bound(params, rep.w0);
    } else {
        rep.w0 = nan;
        rep.kappa_threshold = nan;
        rep.omega_bound = nan;
    }
    const LinearizationResult lin = linearize(params);
    rep.eigenvalues[0] = lin.lambda1;
    rep.eigenvalues[1] = lin.lambda2;
    rep.convergence_rate = local_convergence_rate(lin);
    return rep;
}

}  // namespace circumnav
