#pragma once

#include <string>
#include <vector>

#include "circumnav/controller.hpp"
#include "circumnav/params.hpp"
#include "circumnav/sim.hpp"

namespace circumnav {

enum class DampingRegime { Underdamped, CriticalOrOverdamped };

/// Jacobian of the closed-loop (r, theta) dynamics at the desired
/// equilibrium (r_d, pi/2), with its eigenvalues. Both eigenvalues have
/// strictly negative real part for any valid DesignParams.
struct LinearizationResult {
    double a11, a12, a21, a22;           // [1/s]-scaled entries
    std::complex<double> lambda1;        // + branch of the root
    std::complex<double> lambda2;        // - branch
    DampingRegime regime;
};

/// Closed-form linearization:
///   A = [[0, V], [-k^2 V, -kappa/delta^2]],
///   lambda = (-kappa +- sqrt(kappa^2 - 4 k^2 delta^4 V^2)) / (2 delta^2),
/// underdamped iff kappa < 2 k delta^2 V.
LinearizationResult linearize(const DesignParams& params);

/// Slowest decay rate near the equilibrium: min over eigenvalues of -Re(lambda).
/// Equals kappa/(2 delta^2) in the underdamped regime.
double local_convergence_rate(const LinearizationResult& result);

enum class CheckStatus { Pass, Fail, NotApplicable };

/// One audited invariant. worst_margin > 0 means satisfied with that much
/// slack at the least favourable sample (worst_time); a negative margin is a
/// violation. Vacuous checks report +infinity.
struct InvariantCheck {
    std::string name;
    CheckStatus status;
    double worst_margin;
    double worst_time;
    std::string note;
};

struct InvariantReport {
    std::vector<InvariantCheck> checks;
    bool all_passed() const {
        for (const auto& c : checks) {
            if (c.status == CheckStatus::Fail) return false;
        }
        return true;
    }
    const InvariantCheck* find(const std::string& name) const {
        for (const auto& c : checks) {
            if (c.name == name) return &c;
        }
        return nullptr;
    }
};

/// Audits a recorded trajectory against the seven invariants the theory
/// promises:
///   barrier        eta < delta at every sample with r >= r_a
///   eta_monotone   eta non-increasing between consecutive samples outside
///                  C_a (entry/exit transitions excluded), tol 1e-6*max(1,|eta|)
///   theta_range    theta in (tol, pi - tol), tol = 1e-6 rad
///   omega_bound    |omega| <= V(k + 1/r_a) + kappa*exp(2*W0)/delta^2
///   entry_bearing  every C_a entry bearing >= asin(r_s/r_a) - 1e-3
///   safety         r >= r_s at every sample (no tolerance)
///   steady_state_omega  omega < 0 (clockwise orbit) after convergence
/// eta-based checks are reported NotApplicable for baseline-mode
/// trajectories. The report lists every check even when all pass.
InvariantReport audit(const Trajectory& trajectory, const DesignParams& params, double w0);

/// Assembles the full design report for a configuration. eta0 is eta at the
/// configured initial state; pass NaN when no initial state is in play, in
/// which case the W0-dependent entries are NaN.
DesignReport make_design_report(const DesignParams& params, double eta0);

}  // namespace circumnav
