#pragma once

#include "qwalk/coins.hpp"
#include "qwalk/lattice.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qwalk {

enum class Mode { Single, Pair };

// Start state selector. Pair runs take sep / psi-plus / psi-minus, single
// runs take unbiased / up / down, all localized at the origin.
enum class Initial { Sep, PsiPlus, PsiMinus, Unbiased, Up, Down };

struct ScenarioConfig {
    Mode mode = Mode::Pair;
    std::optional<Initial> initial;
    CoinSpec coin1 = coin::Hadamard{};
    // Pair-only fields; must be absent in single mode.
    std::optional<CoinSpec> coin2;
    std::optional<InteractionRule> interaction;
    std::optional<bool> record_entropy;
    std::optional<int> entropy_stride;

    int steps = 0;
    std::vector<int> snapshot_steps;
    std::filesystem::path output_dir = "out";
    std::string seed_label;
};

// Entropy is computed every step up to this many steps; longer runs default
// to a stride that keeps roughly this many entropy evaluations.
inline constexpr int kEntropyEveryStepLimit = 200;

// Throws ValidationError describing the first violated rule.
void validate(const ScenarioConfig& config);

Initial effective_initial(const ScenarioConfig& config);
bool effective_record_entropy(const ScenarioConfig& config);
int effective_entropy_stride(const ScenarioConfig& config);

std::string to_string(Mode mode);
Mode parse_mode(const std::string& text);
std::string to_string(Initial initial);
Initial parse_initial(const std::string& text);
InitialPair to_initial_pair(Initial initial);
Spinor to_spinor(Initial initial);

// Flat `key = value` text; '#' starts a comment. Keys are the ScenarioConfig
// field names. Values are applied on top of `base`.
using KeyValues = std::vector<std::pair<std::string, std::string>>;
KeyValues parse_key_values(const std::string& text, const std::string& origin);
KeyValues read_key_values(const std::filesystem::path& path);

bool is_config_key(const std::string& key);
void apply(ScenarioConfig& config, const std::string& key, const std::string& value);
void apply(ScenarioConfig& config, const KeyValues& values);

// Inverse of apply: only set fields are emitted, in field order.
KeyValues to_key_values(const ScenarioConfig& config);
std::string render(const KeyValues& values);

}  // namespace qwalk
