#include "qwalk/scenario.hpp"
#include "qwalk/entanglement.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/text.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>

namespace qwalk {

namespace {

bool wants_snapshot(const ScenarioConfig& c, int step) {
    return std::find(c.snapshot_steps.begin(), c.snapshot_steps.end(), step) != c.snapshot_steps.end();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out << content;
    out.close();
    if (!out) {
        throw IoError("failed writing " + path.string());
    }
}

std::string cell(const std::optional<double>& v) { return v ? text::format_double(*v) : std::string(); }

}  // namespace

SimulationResult simulate(const ScenarioConfig& config) {
    validate(config);
    SimulationResult result;
    result.records.reserve(static_cast<std::size_t>(config.steps) + 1);
    const Lattice lattice = lattice_for_steps(config.steps);

    if (config.mode == Mode::Single) {
        auto observe = [&](int step, const SingleState& s) {
            result.max_norm_error = std::max(result.max_norm_error, std::abs(norm(s) - 1.0));
            ObservableRecord rec;
            rec.step = step;
            rec.sigma = sigma(s);
            result.records.push_back(rec);
            if (wants_snapshot(config, step)) {
                result.snapshots.push_back({step, s.lattice(), position_distribution(s)});
            }
        };
        run(make_initial_single(lattice, to_spinor(effective_initial(config))), config.coin1, config.steps,
            {observe});
        return result;
    }

    const PairCoinSpec spec{config.coin1, *config.coin2, *config.interaction};
    const bool with_entropy = effective_record_entropy(config);
    const int stride = effective_entropy_stride(config);
    auto observe = [&](int step, const PairState& s) {
        result.max_norm_error = std::max(result.max_norm_error, std::abs(norm(s) - 1.0));
        const JointDistribution dist = joint_distribution(s);
        ObservableRecord rec;
        rec.step = step;
        rec.c12 = correlation(dist);
        rec.delta12 = avg_separation(dist);
        if (with_entropy && step % stride == 0) rec.entropy = entanglement_entropy(s);
        result.records.push_back(rec);
        if (wants_snapshot(config, step)) {
            result.snapshots.push_back({step, dist.lattice, dist.p});
        }
    };
    run(make_initial_pair(lattice, to_initial_pair(effective_initial(config))), spec, config.steps, {observe});
    return result;
}

std::string timeseries_csv(const std::vector<ObservableRecord>& records) {
    std::string out = "step,sigma,c12,delta12,entropy\n";
    for (const auto& r : records) {
        out += std::to_string(r.step) + "," + cell(r.sigma) + "," + cell(r.c12) + "," + cell(r.delta12) + "," +
               cell(r.entropy) + "\n";
    }
    return out;
}

std::string snapshot_csv(const Snapshot& snap, Mode mode) {
    const Lattice& lat = snap.lattice;
    std::string out;
    if (mode == Mode::Single) {
        out = "x,p\n";
        for (int i = 0; i < lat.sites(); ++i) {
            const double p = snap.p(i, 0);
            if (p > kSnapshotThreshold) out += std::to_string(lat.position(i)) + "," + text::format_double(p) + "\n";
        }
        return out;
    }
    out = "x,y,p\n";
    for (int i = 0; i < lat.sites(); ++i) {
        for (int j = 0; j < lat.sites(); ++j) {
            const double p = snap.p(i, j);
            if (p > kSnapshotThreshold) {
                out += std::to_string(lat.position(i)) + "," + std::to_string(lat.position(j)) + "," +
                       text::format_double(p) + "\n";
            }
        }
    }
    return out;
}

std::string snapshot_sidecar_json(const Snapshot& snap, const ScenarioConfig& config) {
    nlohmann::ordered_json j;
    j["step"] = snap.step;
    j["lattice"] = {{"x_min", -snap.lattice.half_width()}, {"x_max", snap.lattice.half_width()}};
    j["mode"] = to_string(config.mode);
    j["threshold"] = kSnapshotThreshold;
    nlohmann::ordered_json echo = nlohmann::ordered_json::object();
    for (const auto& [k, v] : to_key_values(config)) echo[k] = v;
    j["config"] = echo;
    return j.dump(2) + "\n";
}

ScenarioOutputs run_scenario(const ScenarioConfig& config) {
    validate(config);
    std::error_code ec;
    std::filesystem::create_directories(config.output_dir, ec);
    if (ec) {
        throw IoError("cannot create output directory " + config.output_dir.string() + ": " + ec.message());
    }
    const SimulationResult result = simulate(config);

    ScenarioOutputs out;
    out.timeseries = config.output_dir / "timeseries.csv";
    write_file(out.timeseries, timeseries_csv(result.records));
    for (const auto& snap : result.snapshots) {
        const std::string stem = "snapshot_step" + std::to_string(snap.step);
        const auto csv = config.output_dir / (stem + ".csv");
        write_file(csv, snapshot_csv(snap, config.mode));
        write_file(config.output_dir / (stem + ".json"), snapshot_sidecar_json(snap, config));
        out.snapshots.push_back(csv);
    }
    return out;
}

}  // namespace qwalk
