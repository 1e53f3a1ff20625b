#include "qwalk/sweep.hpp"
#include "qwalk/scenario.hpp"
#include "qwalk/text.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <thread>

namespace qwalk {

namespace {

bool special_key(const std::string& key) { return key == "alpha1" || key == "alpha2" || key == "q" || key == "p"; }

void check_axis_key(const std::string& key) {
    if (special_key(key)) return;
    if (key == "output_dir") {
        throw ValidationError("output_dir cannot be swept");
    }
    if (!is_config_key(key)) {
        throw ValidationError("unknown sweep axis '" + key + "'");
    }
}

coin::Alpha as_alpha(const CoinSpec& spec, double alpha) {
    coin::Alpha a{alpha, 1};
    if (const auto* prev = std::get_if<coin::Alpha>(&spec)) a.tau = prev->tau;
    return a;
}

std::string cell_dir_name(int index) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "cell-%04d", index);
    return buf;
}

}  // namespace

std::vector<SweepAxis> parse_axes(const KeyValues& lines) {
    std::vector<SweepAxis> axes;
    for (const auto& [key, value] : lines) {
        SweepAxis axis;
        axis.keys = text::split(key, '+');
        for (const auto& k : axis.keys) check_axis_key(k);
        for (const auto& item : text::split(value, ',')) {
            auto tuple = axis.keys.size() == 1 ? std::vector<std::string>{item} : text::split(item, '|');
            if (tuple.size() != axis.keys.size()) {
                throw ValidationError("axis '" + key + "' value '" + item + "' needs " +
                                      std::to_string(axis.keys.size()) + " '|'-separated entries");
            }
            axis.values.push_back(std::move(tuple));
        }
        if (axis.values.empty() || (axis.values.size() == 1 && axis.values[0].front().empty())) {
            throw ValidationError("axis '" + key + "' has no values");
        }
        axes.push_back(std::move(axis));
    }
    return axes;
}

std::vector<SweepAxis> read_axes(const std::filesystem::path& path) { return parse_axes(read_key_values(path)); }

std::vector<SweepCell> expand(const std::vector<SweepAxis>& axes) {
    std::vector<SweepCell> cells{SweepCell{}};
    for (const auto& axis : axes) {
        std::vector<SweepCell> next;
        next.reserve(cells.size() * axis.values.size());
        for (const auto& c : cells) {
            for (const auto& tuple : axis.values) {
                SweepCell n = c;
                for (std::size_t k = 0; k < axis.keys.size(); ++k) n.params.emplace_back(axis.keys[k], tuple[k]);
                next.push_back(std::move(n));
            }
        }
        cells = std::move(next);
    }
    for (std::size_t i = 0; i < cells.size(); ++i) cells[i].index = static_cast<int>(i);
    return cells;
}

void apply_sweep_param(ScenarioConfig& c, const std::string& key, const std::string& value) {
    if (key == "alpha1") {
        c.coin1 = as_alpha(c.coin1, text::parse_double(value, key));
        validate(c.coin1);
    } else if (key == "alpha2") {
        c.coin2 = as_alpha(c.coin2.value_or(coin::Hadamard{}), text::parse_double(value, key));
        validate(*c.coin2);
    } else if (key == "q" || key == "p") {
        const int v = text::parse_int(value, key);
        bool touched = false;
        for (CoinSpec* spec : {&c.coin1, c.coin2 ? &*c.coin2 : nullptr}) {
            if (spec == nullptr) continue;
            if (auto* f = std::get_if<coin::Phi>(spec)) {
                (key == "q" ? f->q : f->p) = v;
                validate(*spec);
                touched = true;
            }
        }
        if (!touched) {
            throw ValidationError("sweep key '" + key + "' needs at least one phi coin in the base config");
        }
    } else {
        apply(c, key, value);
    }
}

SweepResult run_sweep(const ScenarioConfig& base, const std::vector<SweepAxis>& axes, unsigned workers) {
    const auto cells = expand(axes);
    std::error_code ec;
    std::filesystem::create_directories(base.output_dir, ec);
    if (ec) {
        throw IoError("cannot create sweep directory " + base.output_dir.string() + ": " + ec.message());
    }

    std::vector<SweepCellResult> results(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            SweepCellResult& r = results[i];
            r.cell = cells[i];
            r.output_dir = base.output_dir / cell_dir_name(cells[i].index);
            try {
                ScenarioConfig cfg = base;
                for (const auto& [k, v] : cells[i].params) apply_sweep_param(cfg, k, v);
                cfg.output_dir = r.output_dir;
                const ScenarioOutputs out = run_scenario(cfg);
                r.timeseries = out.timeseries;
                r.snapshots = out.snapshots;
                r.ok = true;
            } catch (const std::exception& e) {
                r.error = e.what();
            }
        }
    };

    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(cells.size(), 1)));
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    pool.clear();

    nlohmann::ordered_json manifest;
    nlohmann::ordered_json echo = nlohmann::ordered_json::object();
    for (const auto& [k, v] : to_key_values(base)) echo[k] = v;
    manifest["base"] = echo;
    manifest["axes"] = nlohmann::ordered_json::array();
    for (const auto& axis : axes) {
        manifest["axes"].push_back({{"keys", axis.keys}, {"values", axis.values}});
    }
    manifest["cells"] = nlohmann::ordered_json::array();
    for (const auto& r : results) {
        nlohmann::ordered_json entry;
        entry["index"] = r.cell.index;
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.cell.params) params[k] = v;
        entry["params"] = params;
        entry["status"] = r.ok ? "ok" : "error";
        entry["output_dir"] = r.output_dir.generic_string();
        if (r.ok) {
            entry["timeseries"] = r.timeseries.generic_string();
            entry["snapshots"] = nlohmann::ordered_json::array();
            for (const auto& s : r.snapshots) entry["snapshots"].push_back(s.generic_string());
        } else {
            entry["error"] = r.error;
        }
        manifest["cells"].push_back(entry);
    }

    SweepResult out;
    out.manifest = base.output_dir / "manifest.json";
    std::ofstream f(out.manifest, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open " + out.manifest.string() + " for writing");
    f << manifest.dump(2) << "\n";
    if (!f) throw IoError("failed writing " + out.manifest.string());
    out.cells = std::move(results);
    return out;
}

}  // namespace qwalk
