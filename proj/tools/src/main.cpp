#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

// "--sweep-values 0.015,0.03,0.05" -> {0.015, 0.03, 0.05}
std::vector<double> parse_value_list(const std::string& csv) {
    std::vector<double> values;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        const std::size_t comma = csv.find(',', pos);
        const std::string tok = csv.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (!tok.empty()) {
            char* end = nullptr;
            const double v = std::strtod(tok.c_str(), &end);
            if (end == tok.c_str() || *end != '\0') {
                throw CLI::ValidationError("--sweep-values", "'" + tok + "' is not a number");
            }
            values.push_back(v);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return values;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace circumnav::cli;

    CLI::App app{"Safe circumnavigation of a hostile target: design, simulate, sweep, verify"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = ".";
    std::string verify_path;
    std::string sweep_param;
    std::string sweep_values;

    auto* design = app.add_subcommand(
        "design", "Compute the derived controller constants and print the design report");
    design->add_option("--config", config_path, "run configuration JSON")->required();

    auto* sim = app.add_subcommand(
        "simulate", "Run the closed loop, audit it, and write trajectory.csv + summary.json");
    sim->add_option("--config", config_path, "run configuration JSON")->required();
    sim->add_option("--out", out_dir, "output directory (default: current)");

    auto* sweep = app.add_subcommand(
        "sweep", "Batch-run the config across parameter values and write sweep.csv");
    sweep->add_option("--config", config_path, "base configuration JSON")->required();
    sweep->add_option("--out", out_dir, "output directory (default: current)");
    sweep->add_option("--sweep-param", sweep_param, "kappa or theta0_deg")->required();
    sweep->add_option("--sweep-values", sweep_values, "comma-separated values")->required();

    auto* verify = app.add_subcommand(
        "verify", "Re-audit a stored run (directory or trajectory.csv path)");
    verify->add_option("path", verify_path, "run directory or trajectory.csv")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    if (design->parsed()) {
        return guarded([&] { return cmd_design(config_path); });
    }
    if (sim->parsed()) {
        return guarded([&] { return cmd_simulate(config_path, out_dir); });
    }
    if (sweep->parsed()) {
        return guarded([&] {
            const std::vector<double> values = parse_value_list(sweep_values);
            return cmd_sweep(config_path, out_dir, sweep_param, values);
        });
    }
    if (verify->parsed()) {
        return guarded([&] { return cmd_verify(verify_path); });
    }
    return exit_usage;
}
