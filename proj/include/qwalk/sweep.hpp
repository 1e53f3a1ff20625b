#pragma once

#include "qwalk/config.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace qwalk {

// One sweep axis. Several keys joined with '+' in the axes file move
// together: each value is a '|'-separated tuple with one entry per key.
struct SweepAxis {
    std::vector<std::string> keys;
    std::vector<std::vector<std::string>> values;
};

// Axes file lines look like
//   alpha1 = 0, 0.5, 1.25
//   alpha1+alpha2 = 0|0, 0.5|0.5, 0|1.25
//   interaction = none, identity, pi-phase
// Keys: alpha1, alpha2, q, p, or any config key except output_dir.
std::vector<SweepAxis> parse_axes(const KeyValues& lines);
std::vector<SweepAxis> read_axes(const std::filesystem::path& path);

struct SweepCell {
    int index = 0;
    std::vector<std::pair<std::string, std::string>> params;
};

// Cartesian product, first axis varying slowest. Empty axes give one cell.
std::vector<SweepCell> expand(const std::vector<SweepAxis>& axes);

// Applies one parameter to a config (alpha1/alpha2/q/p handled here).
void apply_sweep_param(ScenarioConfig& config, const std::string& key, const std::string& value);

struct SweepCellResult {
    SweepCell cell;
    bool ok = false;
    std::string error;
    std::filesystem::path output_dir;
    std::filesystem::path timeseries;
    std::vector<std::filesystem::path> snapshots;
};

struct SweepResult {
    std::filesystem::path manifest;
    std::vector<SweepCellResult> cells;
};

// Runs every cell into base.output_dir/cell-NNNN with up to `workers`
// threads (0 picks hardware concurrency) and writes manifest.json once all
// cells finish. A failing cell is recorded and does not stop the others.
SweepResult run_sweep(const ScenarioConfig& base, const std::vector<SweepAxis>& axes, unsigned workers = 0);

}  // namespace qwalk
