#pragma once

#include <utility>
#include <vector>

#include "circumnav/controller.hpp"
#include "circumnav/dynamics.hpp"
#include "circumnav/params.hpp"

namespace circumnav {

/// Closed-loop run description. The initial state is given as position plus
/// initial *bearing* theta0 (heading relative to the line of sight, the
/// quantity the admissible set is expressed in); the world heading is
/// psi0 = theta0 + gamma0.
struct SimConfig {
    double x0 = 0.0;      // [m]
    double y0 = 0.0;      // [m]
    double theta0 = 0.0;  // initial bearing [rad]
    TargetPosition target{0.0, 0.0};
    DesignParams params{};
    ControllerMode mode = ControllerMode::BlfState;
    double dt = 1e-3;        // integration step [s]
    double t_final = 120.0;  // [s]
    int record_stride = 1;   // record every Nth step (events always recorded)
    double rdot0 = 0.0;      // estimator seed for range-only mode
    // Permits starts outside the admissible set (used to explore the baseline
    // controller's failure modes). The doomed start inside C_a aimed into the
    // safety circle is rejected regardless.
    bool allow_outside_theta = false;
};

/// One recorded state. eta and W are NaN inside the auxiliary circle and in
/// baseline mode, where they are not defined. omega is the zero-order-hold
/// control computed from this state and applied until the next step.
struct TrajectorySample {
    double t;
    double x;
    double y;
    double psi;
    double r;
    double theta;
    double omega;
    double eta;
    double w;
    bool inside_ca;
};

struct Trajectory {
    std::vector<TrajectorySample> samples;
    SimConfig config;  // snapshot of the run that produced this
};

/// Auxiliary-circle visit: entry time and the first subsequent exit time
/// (exit is NaN when t_final truncates the run mid-chord).
struct EntryInterval {
    double t_entry;
    double t_exit;
};

struct SimSummary {
    int entry_count = 0;
    std::vector<EntryInterval> entry_intervals;
    std::vector<double> entry_bearings;  // interpolated bearing at each entry
    double min_range = 0.0;
    double min_range_time = 0.0;
    bool safety_violated = false;
    bool converged = false;
    double convergence_time = 0.0;  // NaN when not converged
    double final_omega = 0.0;
    double max_abs_omega = 0.0;
    bool eta_monotone_outside_ca = true;
};

enum class CrossingKind { None, Entry, Exit };

struct Crossing {
    CrossingKind kind = CrossingKind::None;
    double fraction = 0.0;  // position of the crossing within the step, in [0, 1]
};

/// Auxiliary-circle crossing test for one integration step. Entry iff
/// prev_r >= r_a > next_r, exit iff prev_r < r_a <= next_r; the crossing
/// time is located by linear interpolation of r - r_a across the step.
Crossing detect_events(double prev_r, double next_r, double r_a);

struct EntryBearingReport {
    bool all_safe = true;
    std::vector<double> bearings;  // [rad], one per detected entry
};

/// Re-derives the entry events from a recorded trajectory and checks each
/// interpolated entry bearing against asin(r_s/r_a) - 1e-3 (the tolerance
/// absorbs interpolation error). Vacuously safe when there are no entries.
EntryBearingReport entry_bearing_check(const Trajectory& trajectory, const RadiiTriple& radii);

/// Fixed-step closed-loop simulation: classic RK4 on (x, y, psi) with the
/// turn rate held constant over each step (evaluated from the step-start
/// state), polar quantities derived per step for the controller and the
/// record. Deterministic: identical config gives bit-identical output.
///
/// The summary is accumulated from every integration step regardless of
/// record_stride. Throws InitialConditionError for starts outside the
/// admissible set (unless allow_outside_theta), BarrierBreach (with
/// timestamp) if eta reaches delta, Error on non-finite state.
std::pair<Trajectory, SimSummary> simulate(const SimConfig& config);

/// Initial bearing for a given world pose, for callers that prefer to
/// specify a heading instead of a bearing.
double initial_bearing_from_pose(const Pose& pose, const TargetPosition& target);

}  // namespace circumnav
