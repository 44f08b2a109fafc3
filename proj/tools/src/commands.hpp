#pragma once

#include <functional>
#include <string>
#include <vector>

namespace circumnav::cli {

// Exit-code taxonomy, stable for CI scripting:
//   0 success, 1 usage or unclassified error, 2 radii geometry violation,
//   3 delta outside (0, Delta], 4 audited invariant failed, 5 barrier
//   breach at runtime, 6 file I/O or format error.
constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_geometry = 2;
constexpr int exit_delta = 3;
constexpr int exit_invariant = 4;
constexpr int exit_barrier = 5;
constexpr int exit_io = 6;

/// Runs fn, mapping library exceptions to the exit taxonomy (message on
/// stderr).
int guarded(const std::function<int()>& fn);

/// Prints the design report JSON for the config to stdout.
int cmd_design(const std::string& config_path);

/// Runs the configured simulation, audits it, and writes trajectory.csv and
/// summary.json into out_dir. Exit 0 when every audited invariant passes,
/// 4 otherwise (outputs are written either way).
int cmd_simulate(const std::string& config_path, const std::string& out_dir);

/// One simulation per value of the swept parameter ("kappa" or
/// "theta0_deg"); writes sweep.csv into out_dir. A failing run becomes an
/// error column entry, not an abort. Row order equals input order
/// regardless of scheduling; CIRCUMNAV_THREADS caps the worker count.
int cmd_sweep(const std::string& config_path, const std::string& out_dir,
              const std::string& param, const std::vector<double>& values);

/// Re-audits a stored run (directory with trajectory.csv + summary.json, or
/// a path to the CSV with summary.json beside it) and prints the audit JSON.
int cmd_verify(const std::string& path);

}  // namespace circumnav::cli
