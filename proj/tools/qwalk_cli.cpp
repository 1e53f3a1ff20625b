// Command-line front end: single scenarios, presets and parameter sweeps.

#include "qwalk/config.hpp"
#include "qwalk/presets.hpp"
#include "qwalk/scenario.hpp"
#include "qwalk/sweep.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

int fail(const std::string& kind, const std::string& message, int code) {
    nlohmann::ordered_json j;
    j["error"] = kind;
    j["message"] = message;
    std::cerr << j.dump() << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discrete-time quantum walks of one or two particles with time-dependent coins"};

    std::optional<std::string> config_file, preset, mode, initial, coin1, coin2, interaction, snapshot_at, out_dir,
        sweep_file, seed_label;
    std::optional<int> steps, entropy_stride;
    bool no_entropy = false;
    bool list_presets = false;
    unsigned workers = 0;

    app.add_option("--config", config_file, "key = value scenario file");
    app.add_option("--preset", preset, "start from a named preset (see --list-presets)");
    app.add_option("--mode", mode, "single | pair");
    app.add_option("--initial", initial, "sep | psi-plus | psi-minus (pair); unbiased | up | down (single)");
    app.add_option("--coin1", coin1, "hadamard | alpha:A[:TAU] | phi:Q/P | general:T:P1:P2");
    app.add_option("--coin2", coin2, "coin of particle 2 (pair mode)");
    app.add_option("--interaction", interaction, "none | identity | pi-phase");
    app.add_option("--steps", steps, "number of steps");
    app.add_option("--snapshot-at", snapshot_at, "comma-separated steps at which to write P(x,y)");
    app.add_option("--entropy-stride", entropy_stride, "compute entropy every K steps");
    app.add_flag("--no-entropy", no_entropy, "skip the entanglement entropy column");
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--seed-label", seed_label, "free-text label echoed into outputs");
    app.add_option("--sweep", sweep_file, "axes file; runs the Cartesian product of the listed values");
    app.add_option("--workers", workers, "sweep worker threads (0 = hardware concurrency)");
    app.add_flag("--list-presets", list_presets, "print preset names and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("usage", e.what(), 64);
    }

    if (list_presets) {
        for (const auto& p : qwalk::presets()) std::cout << p.name << "\t" << p.description << "\n";
        return 0;
    }

    try {
        qwalk::ScenarioConfig config;
        if (preset) config = qwalk::find_preset(*preset).config;
        if (config_file) qwalk::apply(config, qwalk::read_key_values(*config_file));

        auto set = [&config](const char* key, const std::optional<std::string>& v) {
            if (v) qwalk::apply(config, key, *v);
        };
        set("mode", mode);
        set("initial", initial);
        set("coin1", coin1);
        set("coin2", coin2);
        set("interaction", interaction);
        set("snapshot_steps", snapshot_at);
        set("output_dir", out_dir);
        set("seed_label", seed_label);
        if (steps) config.steps = *steps;
        if (entropy_stride) config.entropy_stride = *entropy_stride;
        if (no_entropy) config.record_entropy = false;

        if (sweep_file) {
            const auto axes = qwalk::read_axes(*sweep_file);
            const auto result = qwalk::run_sweep(config, axes, workers);
            int failed = 0;
            for (const auto& c : result.cells) failed += c.ok ? 0 : 1;
            nlohmann::ordered_json j;
            j["status"] = failed == 0 ? "ok" : "partial";
            j["manifest"] = result.manifest.generic_string();
            j["cells"] = result.cells.size();
            j["failed"] = failed;
            std::cout << j.dump() << "\n";
            return failed == 0 ? 0 : 1;
        }

        const auto outputs = qwalk::run_scenario(config);
        nlohmann::ordered_json j;
        j["status"] = "ok";
        j["timeseries"] = outputs.timeseries.generic_string();
        j["snapshots"] = nlohmann::ordered_json::array();
        for (const auto& s : outputs.snapshots) j["snapshots"].push_back(s.generic_string());
        std::cout << j.dump() << "\n";
        return 0;
    } catch (const qwalk::ValidationError& e) {
        return fail("validation", e.what(), 2);
    } catch (const qwalk::IoError& e) {
        return fail("io", e.what(), 3);
    } catch (const std::exception& e) {
        return fail("runtime", e.what(), 4);
    }
}
