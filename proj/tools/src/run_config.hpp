#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "circumnav/diffdrive.hpp"
#include "circumnav/params.hpp"
#include "circumnav/sim.hpp"

namespace circumnav::cli {

/// File/format problems (unreadable path, malformed JSON or CSV, unknown or
/// missing config keys). Mapped to exit code 6.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parsed run configuration. Angles are degrees in the file and converted
/// exactly once, here; everything downstream is radians.
struct RunConfig {
    double r_d = 0.0, r_a = 0.0, r_s = 0.0;
    double speed = 0.0;
    std::optional<double> delta;  // nullopt = "auto" (0.9 * Delta)
    double kappa = 0.0;
    ControllerMode mode = ControllerMode::BlfState;
    double x0 = 0.0, y0 = 0.0, theta0_deg = 0.0, rdot0 = 0.0;
    double target_x = 0.0, target_y = 0.0;
    double dt = 1e-3, t_final = 120.0;
    int record_stride = 1;
    DriveGeometry drive{};
    bool allow_outside_theta = false;

    static RunConfig from_json(const nlohmann::json& j);
    static RunConfig load(const std::string& path);
    nlohmann::json to_json() const;

    DesignParams design_params() const;  // throws RadiiError / DeltaBoundError
    SimConfig sim_config() const;
    double theta0_rad() const;
    double initial_range() const;
    /// eta at the configured initial state; NaN when r(0) < r_a.
    double initial_eta() const;
};

std::string mode_name(ControllerMode mode);
ControllerMode mode_from_name(const std::string& name);

}  // namespace circumnav::cli
