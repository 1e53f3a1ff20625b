#include "qwalk/config.hpp"
#include "qwalk/text.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <numbers>
#include <sstream>

namespace qwalk {

void validate(const ScenarioConfig& c) {
    if (c.steps < 0) {
        throw ValidationError("steps must be >= 0, got " + std::to_string(c.steps));
    }
    validate(c.coin1);
    const bool pair = c.mode == Mode::Pair;
    if (pair) {
        if (!c.coin2) throw ValidationError("pair mode requires coin2");
        if (!c.interaction) throw ValidationError("pair mode requires interaction");
        validate(*c.coin2);
        if (c.entropy_stride && *c.entropy_stride < 1) {
            throw ValidationError("entropy_stride must be >= 1, got " + std::to_string(*c.entropy_stride));
        }
    } else {
        if (c.coin2) throw ValidationError("coin2 is only valid in pair mode");
        if (c.interaction) throw ValidationError("interaction is only valid in pair mode");
        if (c.record_entropy) throw ValidationError("record_entropy is only valid in pair mode");
        if (c.entropy_stride) throw ValidationError("entropy_stride is only valid in pair mode");
    }
    if (c.initial) {
        const bool pair_initial = *c.initial == Initial::Sep || *c.initial == Initial::PsiPlus ||
                                  *c.initial == Initial::PsiMinus;
        if (pair != pair_initial) {
            throw ValidationError("initial state '" + to_string(*c.initial) + "' does not match mode '" +
                                  to_string(c.mode) + "'");
        }
    } else if (pair) {
        throw ValidationError("pair mode requires initial (sep, psi-plus or psi-minus)");
    }
    for (int s : c.snapshot_steps) {
        if (s < 0 || s > c.steps) {
            throw ValidationError("snapshot step " + std::to_string(s) + " outside [0, " + std::to_string(c.steps) + "]");
        }
    }
    if (c.output_dir.empty()) {
        throw ValidationError("output_dir must not be empty");
    }
}

Initial effective_initial(const ScenarioConfig& c) { return c.initial.value_or(Initial::Unbiased); }

bool effective_record_entropy(const ScenarioConfig& c) { return c.mode == Mode::Pair && c.record_entropy.value_or(true); }

int effective_entropy_stride(const ScenarioConfig& c) {
    if (c.entropy_stride) return *c.entropy_stride;
    if (c.steps <= kEntropyEveryStepLimit) return 1;
    return (c.steps + kEntropyEveryStepLimit - 1) / kEntropyEveryStepLimit;
}

std::string to_string(Mode mode) { return mode == Mode::Single ? "single" : "pair"; }

Mode parse_mode(const std::string& text) {
    if (text == "single") return Mode::Single;
    if (text == "pair") return Mode::Pair;
    throw ValidationError("unknown mode '" + text + "' (expected single or pair)");
}

std::string to_string(Initial initial) {
    switch (initial) {
    case Initial::Sep: return "sep";
    case Initial::PsiPlus: return "psi-plus";
    case Initial::PsiMinus: return "psi-minus";
    case Initial::Unbiased: return "unbiased";
    case Initial::Up: return "up";
    case Initial::Down: return "down";
    }
    return "unknown";
}

Initial parse_initial(const std::string& text) {
    if (text == "sep") return Initial::Sep;
    if (text == "psi-plus") return Initial::PsiPlus;
    if (text == "psi-minus") return Initial::PsiMinus;
    if (text == "unbiased") return Initial::Unbiased;
    if (text == "up") return Initial::Up;
    if (text == "down") return Initial::Down;
    throw ValidationError("unknown initial state '" + text + "'");
}

InitialPair to_initial_pair(Initial initial) {
    switch (initial) {
    case Initial::Sep: return InitialPair::sep();
    case Initial::PsiPlus: return InitialPair::psi_plus();
    case Initial::PsiMinus: return InitialPair::psi_minus();
    default: throw ValidationError("'" + to_string(initial) + "' is not a pair initial state");
    }
}

Spinor to_spinor(Initial initial) {
    switch (initial) {
    case Initial::Unbiased: return unbiased_spinor();
    case Initial::Up: return {cplx(1.0), cplx(0.0)};
    case Initial::Down: return {cplx(0.0), cplx(1.0)};
    default: throw ValidationError("'" + to_string(initial) + "' is not a single-walker initial state");
    }
}

KeyValues parse_key_values(const std::string& content, const std::string& origin) {
    KeyValues out;
    std::istringstream in(content);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto body = text::trim(line);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string_view::npos) {
            throw ValidationError(origin + ":" + std::to_string(lineno) + ": expected 'key = value'");
        }
        std::string key(text::trim(body.substr(0, eq)));
        std::string value(text::trim(body.substr(eq + 1)));
        if (key.empty()) {
            throw ValidationError(origin + ":" + std::to_string(lineno) + ": empty key");
        }
        out.emplace_back(std::move(key), std::move(value));
    }
    return out;
}

KeyValues read_key_values(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot read " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_key_values(ss.str(), path.string());
}

bool is_config_key(const std::string& key) {
    static const std::array<std::string_view, 11> keys{"mode",          "initial",        "coin1",          "coin2",
                                                       "interaction",   "steps",          "record_entropy", "entropy_stride",
                                                       "snapshot_steps", "output_dir",    "seed_label"};
    return std::find(keys.begin(), keys.end(), key) != keys.end();
}

void apply(ScenarioConfig& c, const std::string& key, const std::string& value) {
    if (key == "mode") {
        c.mode = parse_mode(value);
    } else if (key == "initial") {
        c.initial = parse_initial(value);
    } else if (key == "coin1") {
        c.coin1 = parse_coin(value);
    } else if (key == "coin2") {
        c.coin2 = parse_coin(value);
    } else if (key == "interaction") {
        c.interaction = parse_interaction(value);
    } else if (key == "steps") {
        c.steps = text::parse_int(value, key);
    } else if (key == "record_entropy") {
        c.record_entropy = text::parse_bool(value, key);
    } else if (key == "entropy_stride") {
        c.entropy_stride = text::parse_int(value, key);
    } else if (key == "snapshot_steps") {
        c.snapshot_steps.clear();
        if (!text::trim(value).empty()) {
            for (const auto& item : text::split(value, ',')) c.snapshot_steps.push_back(text::parse_int(item, key));
        }
    } else if (key == "output_dir") {
        c.output_dir = value;
    } else if (key == "seed_label") {
        c.seed_label = value;
    } else {
        throw ValidationError("unknown config key '" + key + "'");
    }
}

void apply(ScenarioConfig& c, const KeyValues& values) {
    for (const auto& [k, v] : values) apply(c, k, v);
}

KeyValues to_key_values(const ScenarioConfig& c) {
    KeyValues out;
    out.emplace_back("mode", to_string(c.mode));
    if (c.initial) out.emplace_back("initial", to_string(*c.initial));
    out.emplace_back("coin1", to_string(c.coin1));
    if (c.coin2) out.emplace_back("coin2", to_string(*c.coin2));
    if (c.interaction) out.emplace_back("interaction", to_string(*c.interaction));
    out.emplace_back("steps", std::to_string(c.steps));
    if (c.record_entropy) out.emplace_back("record_entropy", *c.record_entropy ? "true" : "false");
    if (c.entropy_stride) out.emplace_back("entropy_stride", std::to_string(*c.entropy_stride));
    std::string snaps;
    for (std::size_t i = 0; i < c.snapshot_steps.size(); ++i) {
        if (i) snaps += ",";
        snaps += std::to_string(c.snapshot_steps[i]);
    }
    out.emplace_back("snapshot_steps", snaps);
    out.emplace_back("output_dir", c.output_dir.generic_string());
    out.emplace_back("seed_label", c.seed_label);
    return out;
}

std::string render(const KeyValues& values) {
    std::string out;
    for (const auto& [k, v] : values) out += k + " = " + v + "\n";
    return out;
}

}  // namespace qwalk
