#pragma once

#include <iosfwd>
#include <string>

#include "hcflow/flow.hpp"

namespace hcflow {

inline constexpr const char* kVersion = "1.0.0";

// Flat key = value configuration with '#' comments.
struct RunSpec {
    FlowConfig config;
    InitialSpec initial;
    int snapshot_stride = 0;
};

// Throws ConfigError with line/field diagnostics.
RunSpec parse_config_text(const std::string& text);
RunSpec parse_config_file(const std::string& path);

// key = value manifest; together with the config it pins a reproducible run.
std::string manifest_text(const RunSpec& spec, const std::string& out_dir,
                          const std::string& timestamp);

std::string csv_header();
std::string csv_row(const StepRow& row);

// Surface snapshot: one header line (mode, n, r, node_count, t), then one
// line per node: coordinate, u, w, nu, kappa components; 17 significant
// digits. Boundary rows use one-sided derivative estimates.
void write_snapshot(std::ostream& os, const FlowConfig& config, const FlowState& state);

// Exit-code contract of the flow command:
// 0 converged and every monitored inequality passed, 3 inadmissible initial
// data, 4 non-convergence (incl. step failure), 5 monitor failure.
// Parse/validation problems exit 2 before a run starts.
int flow_exit_code(bool admissible, bool converged, bool monitors_pass);

}  // namespace hcflow
