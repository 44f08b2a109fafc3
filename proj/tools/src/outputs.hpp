#pragma once

#include <string>

#include <json.hpp>

#include "circumnav/analysis.hpp"
#include "circumnav/sim.hpp"
#include "run_config.hpp"

namespace circumnav::cli {

/// Fixed-order trajectory CSV: header row then one row per recorded sample,
/// numbers at 9 significant digits, inside_Ca as 0/1, absent eta/W as nan.
void write_trajectory_csv(const std::string& path, const Trajectory& trajectory);

/// Inverse of write_trajectory_csv. The config snapshot is not stored in the
/// CSV, so the caller supplies it. Throws IoError on any malformed content.
Trajectory read_trajectory_csv(const std::string& path, const SimConfig& config);

nlohmann::json design_report_json(const DesignReport& report, const RunConfig& config);
nlohmann::json summary_json(const SimSummary& summary);
nlohmann::json audit_json(const InvariantReport& report);

/// Full summary document: config snapshot + design report + run summary +
/// audit, serialized deterministically.
nlohmann::json summary_document(const RunConfig& config, const DesignReport& design,
                                const SimSummary& summary, const InvariantReport& audit_report);

void write_json(const std::string& path, const nlohmann::json& j);
nlohmann::json read_json(const std::string& path);

}  // namespace circumnav::cli
