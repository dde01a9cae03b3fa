#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bsep/scenarios.hpp"

namespace bsep {

inline constexpr const char* kVersion = "0.1.0";

struct ScenarioConfig {
    std::string scenario = "ex1";
    nlohmann::json params;  // per-scenario parameters
    std::string solver = "recommended";
    int refine = 0;           // extra refinement levels
    unsigned long seed = 1;   // randomized grids are seeded and recorded
    double h_fd = 1e-3;
    nlohmann::json tolerances;  // optional overrides
    std::string out_dir = ".";
};

ScenarioConfig parse_config(const nlohmann::json& j);
nlohmann::json serialize_config(const ScenarioConfig& c);
ScenarioConfig load_config(const std::string& path);

// FNV-1a of the canonical serialization: the provenance hash.
std::string config_hash(const ScenarioConfig& c);

// Scenario dispatch from config (name + params).
ScenarioBundle build_scenario(const ScenarioConfig& c);
SolverKind solver_from_config(const ScenarioConfig& c, const ScenarioBundle& bundle);

// Dense sample table "xi,phi,dphi" (CSV, strictly increasing xi starting at
// 0) -> piecewise-linear GraphFunction. Declared in configs as
// {"type": "table", "path": ...}.
GraphFunction load_graph_table(const std::string& path);

struct Report {
    nlohmann::json body;

    void set_provenance(const ScenarioConfig& c);
    void write(const std::string& path) const;
};

// CSV helpers: one header row then data rows.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

// Field dump rows (x, y, Re u, Im u, |u|) for a set of points.
void dump_field_csv(const std::string& path, const std::function<Cpx(Cpx)>& field,
                    const std::vector<Cpx>& points);

// Subcommand drivers; return process exit codes (classify: 0 BS, 1 NOT_BS,
// 2 INDETERMINATE; others: 0 ok / 3 certificate failure).
int cmd_classify(const ScenarioConfig& c);
int cmd_split(const ScenarioConfig& c);
int cmd_witness(const ScenarioConfig& c);
int cmd_theorem9(const ScenarioConfig& c);

}  // namespace bsep
