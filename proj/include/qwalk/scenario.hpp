#pragma once

#include "qwalk/config.hpp"
#include "qwalk/observables.hpp"

#include <Eigen/Dense>

#include <filesystem>
#include <string>
#include <vector>

namespace qwalk {

struct Snapshot {
    int step = 0;
    Lattice lattice{0};
    // Pair runs: P(x, y). Single runs: one column holding P(x).
    Eigen::MatrixXd p;
};

struct SimulationResult {
    std::vector<ObservableRecord> records;  // one per step, 0..steps
    std::vector<Snapshot> snapshots;
    double max_norm_error = 0.0;            // max |norm - 1| over all steps
};

// Runs the evolution in memory and collects one record per step.
SimulationResult simulate(const ScenarioConfig& config);

struct ScenarioOutputs {
    std::filesystem::path timeseries;
    std::vector<std::filesystem::path> snapshots;  // CSV files; each has a .json sidecar
};

// simulate() followed by writing the CSV/JSON files under config.output_dir.
// Validation happens before any work; I/O failures name the path.
ScenarioOutputs run_scenario(const ScenarioConfig& config);

// Serialization, also used by the golden-file tests.
std::string timeseries_csv(const std::vector<ObservableRecord>& records);
std::string snapshot_csv(const Snapshot& snap, Mode mode);
std::string snapshot_sidecar_json(const Snapshot& snap, const ScenarioConfig& config);

// Below this probability a snapshot cell is omitted.
inline constexpr double kSnapshotThreshold = 1e-15;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qwalk
