#include "run_config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>

#include "circumnav/controller.hpp"

namespace circumnav::cli {

namespace {

using nlohmann::json;

void require_keys(const json& obj, const std::string& where,
                  std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional = {}) {
    if (!obj.is_object()) {
        throw IoError("config: '" + where + "' must be a JSON object");
    }
    for (const char* key : required) {
        if (!obj.contains(key)) {
            throw IoError("config: missing key '" + where + "." + key + "'");
        }
    }
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* key : required) known = known || it.key() == key;
        for (const char* key : optional) known = known || it.key() == key;
        if (!known) {
            throw IoError("config: unknown key '" + where + "." + it.key() + "'");
        }
    }
}

double number_at(const json& obj, const std::string& where, const char* key) {
    const auto& v = obj.at(key);
    if (!v.is_number()) {
        throw IoError("config: '" + where + "." + key + "' must be a number");
    }
    return v.get<double>();
}

}  // namespace

std::string mode_name(ControllerMode mode) {
    switch (mode) {
        case ControllerMode::BlfState: return "blf_state";
        case ControllerMode::BlfRangeOnly: return "blf_range_only";
        case ControllerMode::Baseline: return "baseline";
    }
    return "blf_state";
}

ControllerMode mode_from_name(const std::string& name) {
    if (name == "blf_state") return ControllerMode::BlfState;
    if (name == "blf_range_only") return ControllerMode::BlfRangeOnly;
    if (name == "baseline") return ControllerMode::Baseline;
    throw IoError("config: unknown controller_mode '" + name +
                  "' (expected blf_state, blf_range_only or baseline)");
}

RunConfig RunConfig::from_json(const json& j) {
    require_keys(j, "", {"radii", "speed", "gains", "controller_mode", "initial", "target",
                         "integration"},
                 {"drive", "allow_outside_theta"});

    RunConfig c;
    const auto& radii = j.at("radii");
    require_keys(radii, "radii", {"r_d", "r_a", "r_s"});
    c.r_d = number_at(radii, "radii", "r_d");
    c.r_a = number_at(radii, "radii", "r_a");
    c.r_s = number_at(radii, "radii", "r_s");

    if (!j.at("speed").is_number()) throw IoError("config: 'speed' must be a number");
    c.speed = j.at("speed").get<double>();

    const auto& gains = j.at("gains");
    require_keys(gains, "gains", {"delta", "kappa"});
    const auto& delta = gains.at("delta");
    if (delta.is_string()) {
        if (delta.get<std::string>() != "auto") {
            throw IoError("config: 'gains.delta' must be a number or \"auto\"");
        }
        c.delta = std::nullopt;
    } else if (delta.is_number()) {
        c.delta = delta.get<double>();
    } else {
        throw IoError("config: 'gains.delta' must be a number or \"auto\"");
    }
    c.kappa = number_at(gains, "gains", "kappa");

    if (!j.at("controller_mode").is_string()) {
        throw IoError("config: 'controller_mode' must be a string");
    }
    c.mode = mode_from_name(j.at("controller_mode").get<std::string>());

    const auto& initial = j.at("initial");
    require_keys(initial, "initial", {"x", "y", "theta0_deg"}, {"rdot0"});
    c.x0 = number_at(initial, "initial", "x");
    c.y0 = number_at(initial, "initial", "y");
    c.theta0_deg = number_at(initial, "initial", "theta0_deg");
    c.rdot0 = initial.contains("rdot0") ? number_at(initial, "initial", "rdot0") : 0.0;

    const auto& target = j.at("target");
    require_keys(target, "target", {"x", "y"});
    c.target_x = number_at(target, "target", "x");
    c.target_y = number_at(target, "target", "y");

    const auto& integ = j.at("integration");
    require_keys(integ, "integration", {"dt", "t_final"}, {"record_stride"});
    c.dt = number_at(integ, "integration", "dt");
    c.t_final = number_at(integ, "integration", "t_final");
    if (integ.contains("record_stride")) {
        if (!integ.at("record_stride").is_number_integer()) {
            throw IoError("config: 'integration.record_stride' must be an integer");
        }
        c.record_stride = integ.at("record_stride").get<int>();
    }

    if (j.contains("drive")) {
        const auto& drive = j.at("drive");
        require_keys(drive, "drive", {"d_w", "v_wheel_max"});
        c.drive.d_w = number_at(drive, "drive", "d_w");
        c.drive.v_wheel_max = number_at(drive, "drive", "v_wheel_max");
        if (!(c.drive.d_w > 0.0) || !(c.drive.v_wheel_max > 0.0)) {
            throw IoError("config: drive geometry values must be positive");
        }
    }
    if (j.contains("allow_outside_theta")) {
        if (!j.at("allow_outside_theta").is_boolean()) {
            throw IoError("config: 'allow_outside_theta' must be a boolean");
        }
        c.allow_outside_theta = j.at("allow_outside_theta").get<bool>();
    }
    return c;
}

RunConfig RunConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config file '" + path + "'");
    }
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw IoError("config '" + path + "' is not valid JSON: " + e.what());
    }
    return from_json(j);
}

nlohmann::json RunConfig::to_json() const {
    json j;
    j["radii"] = {{"r_d", r_d}, {"r_a", r_a}, {"r_s", r_s}};
    j["speed"] = speed;
    if (delta.has_value()) {
        j["gains"] = {{"delta", *delta}, {"kappa", kappa}};
    } else {
        j["gains"] = {{"delta", "auto"}, {"kappa", kappa}};
    }
    j["controller_mode"] = mode_name(mode);
    j["initial"] = {{"x", x0}, {"y", y0}, {"theta0_deg", theta0_deg}, {"rdot0", rdot0}};
    j["target"] = {{"x", target_x}, {"y", target_y}};
    j["integration"] = {{"dt", dt}, {"t_final", t_final}, {"record_stride", record_stride}};
    j["drive"] = {{"d_w", drive.d_w}, {"v_wheel_max", drive.v_wheel_max}};
    j["allow_outside_theta"] = allow_outside_theta;
    return j;
}

DesignParams RunConfig::design_params() const {
    const RadiiTriple radii = validate_radii(r_d, r_a, r_s);
    return make_design_params(radii, speed, delta, kappa);
}

double RunConfig::theta0_rad() const {
    return theta0_deg * std::numbers::pi / 180.0;
}

double RunConfig::initial_range() const {
    return std::hypot(target_x - x0, target_y - y0);
}

SimConfig RunConfig::sim_config() const {
    SimConfig sc;
    sc.x0 = x0;
    sc.y0 = y0;
    sc.theta0 = theta0_rad();
    sc.target = {target_x, target_y};
    sc.params = design_params();
    sc.mode = mode;
    sc.dt = dt;
    sc.t_final = t_final;
    sc.record_stride = record_stride;
    sc.rdot0 = rdot0;
    sc.allow_outside_theta = allow_outside_theta;
    return sc;
}

double RunConfig::initial_eta() const {
    const DesignParams params = design_params();
    const double r0 = initial_range();
    if (r0 < params.radii.r_a) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    return eta(r0, wrap_angle(theta0_rad()), params);
}

}  // namespace circumnav::cli
