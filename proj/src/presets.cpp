#include "qwalk/presets.hpp"
#include "qwalk/text.hpp"

#include <array>
#include <utility>

namespace qwalk {

namespace {

struct InitialTag {
    Initial initial;
    const char* tag;
};

struct InteractionTag {
    InteractionRule rule;
    const char* tag;
};

constexpr std::array<InitialTag, 3> kInitials{{
    {Initial::Sep, "sep"},
    {Initial::PsiPlus, "psiplus"},
    {Initial::PsiMinus, "psiminus"},
}};

constexpr std::array<InteractionTag, 3> kInteractions{{
    {InteractionRule::None, "noninteracting"},
    {InteractionRule::IdentityOne, "one"},
    {InteractionRule::PiPhase, "piphase"},
}};

constexpr std::array<std::pair<double, double>, 5> kAlphaPairs{{
    {0.0, 0.0},
    {0.5, 0.5},
    {1.25, 1.25},
    {0.0, 0.5},
    {0.0, 1.25},
}};

constexpr std::array<std::pair<int, int>, 3> kPhiParams{{{1, 100}, {1, 50}, {4, 50}}};

constexpr int kSingleAlphaSteps = 1000;
constexpr int kSinglePhiSteps = 200;
constexpr int kAlphaPairSteps = 100;
constexpr int kPhiPairSteps = 200;

std::string alpha_tag(double a1, double a2) {
    if (a1 == a2) return "a" + text::format_double(a1);
    return "a" + text::format_double(a1) + "-a" + text::format_double(a2);
}

std::string phi_tag(int q, int p) { return "q" + std::to_string(q) + "p" + std::to_string(p); }

ScenarioConfig pair_config(Initial initial, CoinSpec c1, CoinSpec c2, InteractionRule rule, int steps) {
    ScenarioConfig c;
    c.mode = Mode::Pair;
    c.initial = initial;
    c.coin1 = c1;
    c.coin2 = c2;
    c.interaction = rule;
    c.steps = steps;
    return c;
}

std::vector<Preset> build_catalog() {
    std::vector<Preset> out;
    auto add = [&out](std::string name, std::string description, ScenarioConfig config) {
        config.output_dir = "out/" + name;
        config.seed_label = name;
        out.push_back({std::move(name), std::move(description), std::move(config)});
    };

    for (double a : {0.0, 0.25, 0.5, 0.75, 1.25}) {
        ScenarioConfig c;
        c.mode = Mode::Single;
        c.initial = Initial::Unbiased;
        c.coin1 = coin::Alpha{a, 1};
        c.steps = kSingleAlphaSteps;
        add("single-alpha-" + text::format_double(a), "single walker spreading under the alpha coin", c);
    }
    for (auto [q, p] : std::array<std::pair<int, int>, 4>{{{1, 100}, {1, 50}, {4, 50}, {3, 50}}}) {
        ScenarioConfig c;
        c.mode = Mode::Single;
        c.initial = Initial::Unbiased;
        c.coin1 = coin::Phi{q, p};
        c.steps = kSinglePhiSteps;
        add("single-phi-" + phi_tag(q, p), "single walker dynamical localization under the phi coin", c);
    }
    for (const auto& init : kInitials) {
        for (const auto& inter : kInteractions) {
            for (auto [a1, a2] : kAlphaPairs) {
                auto c = pair_config(init.initial, coin::Alpha{a1, 1}, coin::Alpha{a2, 1}, inter.rule, kAlphaPairSteps);
                c.snapshot_steps = {kAlphaPairSteps};
                add(std::string("fig-") + init.tag + "-" + inter.tag + "-" + alpha_tag(a1, a2),
                    "two walkers under alpha coins", c);
            }
        }
    }
    for (const auto& inter : kInteractions) {
        for (const auto& init : kInitials) {
            for (auto [q, p] : kPhiParams) {
                auto c = pair_config(init.initial, coin::Phi{q, p}, coin::Phi{q, p}, inter.rule, kPhiPairSteps);
                c.snapshot_steps = {p, kPhiPairSteps};
                add(std::string("dynloc-") + inter.tag + "-" + init.tag + "-" + phi_tag(q, p),
                    "two walkers under phi coins", c);
            }
        }
    }
    for (Initial init : {Initial::PsiPlus, Initial::PsiMinus}) {
        auto c = pair_config(init, coin::Hadamard{}, coin::Phi{1, 50}, InteractionRule::None, kPhiPairSteps);
        c.snapshot_steps = {kPhiPairSteps};
        add(std::string("mixed-hadamard-phi-") + (init == Initial::PsiPlus ? "psiplus" : "psiminus") + "-q1p50",
            "Hadamard walker paired with a phi-coin walker", c);
    }
    return out;
}

}  // namespace

const std::vector<Preset>& presets() {
    static const std::vector<Preset> catalog = build_catalog();
    return catalog;
}

const Preset& find_preset(const std::string& name) {
    for (const auto& p : presets()) {
        if (p.name == name) return p;
    }
    std::string hint;
    for (const auto& p : presets()) {
        if (p.name.rfind(name.substr(0, name.find('-')), 0) == 0) {
            hint += (hint.empty() ? "" : ", ") + p.name;
            if (hint.size() > 200) break;
        }
    }
    throw ValidationError("unknown preset '" + name + "'" + (hint.empty() ? "" : " (did you mean: " + hint + ")"));
}

}  // namespace qwalk
