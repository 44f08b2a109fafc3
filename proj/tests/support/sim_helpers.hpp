#pragma once

// Shared helpers for simulation-level tests: admissible-start generation and
// the reference experiment configuration used across the suites.

#include <cmath>
#include <numbers>
#include <random>

#include "circumnav/controller.hpp"
#include "circumnav/sim.hpp"

namespace sim_helpers {

inline circumnav::DesignParams reference_params(double kappa = 0.05) {
    return circumnav::make_design_params(circumnav::validate_radii(1.0, 0.7, 0.4), 0.6, 0.5,
                                         kappa);
}

/// Reference run: start (1, 0.8) with bearing 38 degrees, target at the
/// origin, dt = 1 ms.
inline circumnav::SimConfig reference_config(double kappa = 0.05, double t_final = 120.0) {
    circumnav::SimConfig c;
    c.x0 = 1.0;
    c.y0 = 0.8;
    c.theta0 = 38.0 * std::numbers::pi / 180.0;
    c.target = {0.0, 0.0};
    c.params = reference_params(kappa);
    c.mode = circumnav::ControllerMode::BlfState;
    c.dt = 1e-3;
    c.t_final = t_final;
    c.record_stride = 1;
    return c;
}

/// Random start inside the admissible set, with a safety margin on the
/// barrier so runs are numerically well-posed. Position direction is
/// randomized; the target sits at the origin.
inline circumnav::SimConfig random_admissible_config(std::mt19937& rng,
                                                     const circumnav::DesignParams& params,
                                                     double dt = 1e-3, double t_final = 120.0,
                                                     int record_stride = 5) {
    constexpr double pi = std::numbers::pi;
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        const double r0 = params.radii.r_a + (2.0 * params.radii.r_d - params.radii.r_a) * u01(rng);
        const double theta0 = 0.05 + (pi - 0.10) * u01(rng);
        if (circumnav::eta(r0, theta0, params) >= 0.98 * params.delta) continue;
        const double alpha = 2.0 * pi * u01(rng);
        circumnav::SimConfig c;
        c.x0 = r0 * std::cos(alpha);
        c.y0 = r0 * std::sin(alpha);
        c.theta0 = theta0;
        c.target = {0.0, 0.0};
        c.params = params;
        c.mode = circumnav::ControllerMode::BlfState;
        c.dt = dt;
        c.t_final = t_final;
        c.record_stride = record_stride;
        return c;
    }
    throw std::runtime_error("no admissible start found (generator misconfigured)");
}

}  // namespace sim_helpers
