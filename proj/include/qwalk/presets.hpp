#pragma once

#include "qwalk/config.hpp"

#include <string>
#include <vector>

namespace qwalk {

struct Preset {
    std::string name;
    std::string description;
    ScenarioConfig config;
};

// Catalog of the studied cases:
//   single-alpha-<a>                       single walker, alpha coin, 1000 steps
//   single-phi-q<q>p<p>                    single walker, phi coin, 200 steps
//   fig-<initial>-<interaction>-<alphas>   pair, alpha coins, 100 steps, snapshot at 100
//   dynloc-<interaction>-<initial>-q<q>p<p> pair, phi coins on both walkers, 200 steps
//   mixed-hadamard-phi-<initial>-q1p50     pair, Hadamard on walker 1, phi on walker 2
// with initial in {sep, psiplus, psiminus} and interaction in
// {noninteracting, one, piphase}.
const std::vector<Preset>& presets();

// Throws ValidationError listing the closest names when unknown.
const Preset& find_preset(const std::string& name);

}  // namespace qwalk
