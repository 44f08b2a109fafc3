#include "commands.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <iostream>
#include <thread>

#include "circumnav/analysis.hpp"
#include "outputs.hpp"
#include "run_config.hpp"

namespace circumnav::cli {

namespace fs = std::filesystem;

int guarded(const std::function<int()>& fn) {
    try {
        return fn();
    } catch (const RadiiError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_geometry;
    } catch (const DeltaBoundError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_delta;
    } catch (const BarrierBreach& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_barrier;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_io;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

int cmd_design(const std::string& config_path) {
    const RunConfig config = RunConfig::load(config_path);
    const DesignParams params = config.design_params();
    const DesignReport report = make_design_report(params, config.initial_eta());
    std::cout << design_report_json(report, config).dump(2) << '\n';
    return exit_ok;
}

int cmd_simulate(const std::string& config_path, const std::string& out_dir) {
    const RunConfig config = RunConfig::load(config_path);
    const DesignParams params = config.design_params();
    const DesignReport report = make_design_report(params, config.initial_eta());

    auto [trajectory, summary] = simulate(config.sim_config());
    const InvariantReport audit_report = audit(trajectory, params, report.w0);

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory '" + out_dir + "': " + ec.message());

    write_trajectory_csv((fs::path(out_dir) / "trajectory.csv").string(), trajectory);
    write_json((fs::path(out_dir) / "summary.json").string(),
               summary_document(config, report, summary, audit_report));

    return audit_report.all_passed() ? exit_ok : exit_invariant;
}

namespace {

struct SweepRow {
    double value = 0.0;
    int entry_count = 0;
    double min_range = std::numeric_limits<double>::quiet_NaN();
    double convergence_time = std::numeric_limits<double>::quiet_NaN();
    std::string error;
};

SweepRow run_one(const RunConfig& base, const std::string& param, double value) {
    SweepRow row;
    row.value = value;
    RunConfig config = base;
    if (param == "kappa") {
        config.kappa = value;
    } else {
        config.theta0_deg = value;
    }
    try {
        auto [trajectory, summary] = simulate(config.sim_config());
        row.entry_count = summary.entry_count;
        row.min_range = summary.min_range;
        row.convergence_time = summary.convergence_time;
    } catch (const std::exception& e) {
        std::string msg = e.what();
        for (char& ch : msg) {
            if (ch == ',' || ch == '\n') ch = ';';
        }
        row.error = msg;
    }
    return row;
}

unsigned sweep_worker_count(std::size_t jobs) {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("CIRCUMNAV_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) n = static_cast<unsigned>(cap);
    }
    return std::min<std::size_t>(n, jobs);
}

}  // namespace

int cmd_sweep(const std::string& config_path, const std::string& out_dir,
              const std::string& param, const std::vector<double>& values) {
    if (param != "kappa" && param != "theta0_deg") {
        std::cerr << "error: --sweep-param must be 'kappa' or 'theta0_deg'\n";
        return exit_usage;
    }
    if (values.empty()) {
        std::cerr << "error: --sweep-values must list at least one value\n";
        return exit_usage;
    }
    const RunConfig base = RunConfig::load(config_path);
    base.design_params();  // surface geometry/delta errors before spawning workers

    std::vector<SweepRow> rows(values.size());
    std::atomic<std::size_t> next{0};
    const unsigned workers = sweep_worker_count(values.size());
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < values.size(); i = next.fetch_add(1)) {
                rows[i] = run_one(base, param, values[i]);
            }
        });
    }
    for (auto& th : pool) th.join();

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory '" + out_dir + "': " + ec.message());

    const std::string path = (fs::path(out_dir) / "sweep.csv").string();
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << param << ",entry_count,min_range,convergence_time,error\n";
    char buf[40];
    auto put9 = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.9g", v);
        out << buf;
    };
    for (const auto& row : rows) {
        put9(row.value);
        out << ',' << row.entry_count << ',';
        put9(row.min_range);
        out << ',';
        put9(row.convergence_time);
        out << ',' << row.error << '\n';
    }
    if (!out) throw IoError("write failed for '" + path + "'");
    return exit_ok;
}

int cmd_verify(const std::string& path) {
    fs::path traj_path(path);
    fs::path summary_path;
    if (fs::is_directory(traj_path)) {
        summary_path = traj_path / "summary.json";
        traj_path /= "trajectory.csv";
    } else {
        summary_path = traj_path.parent_path() / "summary.json";
    }

    const nlohmann::json doc = read_json(summary_path.string());
    if (!doc.contains("config")) {
        throw IoError(summary_path.string() + ": no embedded config snapshot");
    }
    const RunConfig config = RunConfig::from_json(doc.at("config"));
    const DesignParams params = config.design_params();

    const Trajectory trajectory = read_trajectory_csv(traj_path.string(), config.sim_config());
    const DesignReport report = make_design_report(params, config.initial_eta());
    const InvariantReport audit_report = audit(trajectory, params, report.w0);

    std::cout << audit_json(audit_report).dump(2) << '\n';
    return audit_report.all_passed() ? exit_ok : exit_invariant;
}

}  // namespace circumnav::cli
