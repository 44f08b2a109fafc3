#include "outputs.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "circumnav/diffdrive.hpp"
#include "circumnav/dynamics.hpp"

namespace circumnav::cli {

namespace {

using nlohmann::json;

const char* csv_header = "t,x,y,psi,r,theta,omega,eta,W,inside_Ca";

std::string fmt9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::NotApplicable: return "not_applicable";
    }
    return "fail";
}

double parse_double(const std::string& field, const std::string& path, std::size_t line) {
    const char* begin = field.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0') {
        throw IoError(path + ":" + std::to_string(line) + ": bad numeric field '" + field + "'");
    }
    return v;
}

}  // namespace

void write_trajectory_csv(const std::string& path, const Trajectory& trajectory) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << csv_header << '\n';
    for (const auto& s : trajectory.samples) {
        out << fmt9(s.t) << ',' << fmt9(s.x) << ',' << fmt9(s.y) << ',' << fmt9(s.psi) << ','
            << fmt9(s.r) << ',' << fmt9(s.theta) << ',' << fmt9(s.omega) << ',' << fmt9(s.eta)
            << ',' << fmt9(s.w) << ',' << (s.inside_ca ? 1 : 0) << '\n';
    }
    if (!out) throw IoError("write failed for '" + path + "'");
}

Trajectory read_trajectory_csv(const std::string& path, const SimConfig& config) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open trajectory file '" + path + "'");

    std::string line;
    if (!std::getline(in, line) || line != csv_header) {
        throw IoError(path + ": missing or unexpected CSV header");
    }

    Trajectory trajectory;
    trajectory.config = config;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) {
            throw IoError(path + ":" + std::to_string(lineno) + ": empty row");
        }
        std::stringstream ss(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (fields.size() != 10) {
            throw IoError(path + ":" + std::to_string(lineno) + ": expected 10 columns, got " +
                          std::to_string(fields.size()));
        }
        TrajectorySample s;
        s.t = parse_double(fields[0], path, lineno);
        s.x = parse_double(fields[1], path, lineno);
        s.y = parse_double(fields[2], path, lineno);
        s.psi = parse_double(fields[3], path, lineno);
        s.r = parse_double(fields[4], path, lineno);
        s.theta = parse_double(fields[5], path, lineno);
        s.omega = parse_double(fields[6], path, lineno);
        s.eta = parse_double(fields[7], path, lineno);
        s.w = parse_double(fields[8], path, lineno);
        if (fields[9] == "0") {
            s.inside_ca = false;
        } else if (fields[9] == "1") {
            s.inside_ca = true;
        } else {
            throw IoError(path + ":" + std::to_string(lineno) + ": inside_Ca must be 0 or 1");
        }
        trajectory.samples.push_back(s);
    }
    if (trajectory.samples.empty()) {
        throw IoError(path + ": no samples");
    }
    return trajectory;
}

nlohmann::json design_report_json(const DesignReport& report, const RunConfig& config) {
    json j;
    j["k"] = report.k;
    j["beta"] = report.beta;
    j["Delta"] = report.delta_bound;
    j["delta"] = report.delta;
    j["min_safe_bearing_rad"] = report.min_safe_bearing;
    j["eta0"] = report.eta0;
    j["W0"] = report.w0;
    j["kappa_threshold"] = report.kappa_threshold;
    j["kappa"] = config.kappa;
    j["single_entry_regime"] =
        std::isfinite(report.kappa_threshold) ? json(config.kappa >= report.kappa_threshold) : json();
    j["omega_bound"] = report.omega_bound;
    j["eigenvalues"] = {{report.eigenvalues[0].real(), report.eigenvalues[0].imag()},
                        {report.eigenvalues[1].real(), report.eigenvalues[1].imag()}};
    j["convergence_rate"] = report.convergence_rate;
    const double theta0 = wrap_angle(config.theta0_rad());
    j["initial_in_theta"] = std::isfinite(report.eta0) && report.eta0 < report.delta &&
                            theta0 > 0.0 && theta0 < std::numbers::pi;

    const double max_omega = max_feasible_omega(config.speed, config.drive);
    j["drive"] = {{"d_w", config.drive.d_w},
                  {"v_wheel_max", config.drive.v_wheel_max},
                  {"max_feasible_omega", max_omega},
                  {"omega_bound_feasible", std::isfinite(report.omega_bound)
                                               ? json(report.omega_bound <= max_omega)
                                               : json()}};
    return j;
}

nlohmann::json summary_json(const SimSummary& summary) {
    json j;
    j["entry_count"] = summary.entry_count;
    json intervals = json::array();
    for (const auto& iv : summary.entry_intervals) {
        intervals.push_back({iv.t_entry, iv.t_exit});
    }
    j["entry_intervals"] = intervals;
    j["entry_bearings_rad"] = summary.entry_bearings;
    j["min_range"] = summary.min_range;
    j["min_range_time"] = summary.min_range_time;
    j["safety_violated"] = summary.safety_violated;
    j["converged"] = summary.converged;
    j["convergence_time"] = summary.convergence_time;
    j["final_omega"] = summary.final_omega;
    j["max_abs_omega"] = summary.max_abs_omega;
    j["eta_monotone_outside_Ca"] = summary.eta_monotone_outside_ca;
    return j;
}

nlohmann::json audit_json(const InvariantReport& report) {
    json checks = json::array();
    for (const auto& c : report.checks) {
        json jc;
        jc["name"] = c.name;
        jc["status"] = status_name(c.status);
        jc["worst_margin"] = c.worst_margin;
        jc["worst_time"] = c.worst_time;
        if (!c.note.empty()) jc["note"] = c.note;
        checks.push_back(jc);
    }
    return json{{"all_passed", report.all_passed()}, {"checks", checks}};
}

nlohmann::json summary_document(const RunConfig& config, const DesignReport& design,
                                const SimSummary& summary, const InvariantReport& audit_report) {
    json j;
    j["config"] = config.to_json();
    j["design"] = design_report_json(design, config);
    j["summary"] = summary_json(summary);
    j["audit"] = audit_json(audit_report);
    return j;
}

void write_json(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << j.dump(2) << '\n';
    if (!out) throw IoError("write failed for '" + path + "'");
}

nlohmann::json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    try {
        json j;
        in >> j;
        return j;
    } catch (const json::exception& e) {
        throw IoError("'" + path + "' is not valid JSON: " + std::string(e.what()));
    }
}

}  // namespace circumnav::cli
