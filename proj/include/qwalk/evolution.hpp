#pragma once

#include "qwalk/coins.hpp"
#include "qwalk/lattice.hpp"

#include <functional>
#include <vector>

namespace qwalk {

// Lattice that contains the light cone of `steps` steps from the origin,
// plus one site of margin.
inline Lattice lattice_for_steps(int steps) { return Lattice(steps + 1); }

// One step U = S (I (x) C): coin on every site, then up moves +1 and down -1.
// Throws BoundaryError if the light cone would leave the lattice.
SingleState step_single(const SingleState& state, const CoinSpec& spec, int t);

// Pair step. The cell 4-vector at (x, y) is multiplied by
// pair_coin_at(spec, t, x == y); then each particle shifts by its own spin.
PairState step_pair(const PairState& state, const PairCoinSpec& spec, int t);

using SingleObserver = std::function<void(int step, const SingleState&)>;
using PairObserver = std::function<void(int step, const PairState&)>;

// Applies steps k = 1..steps with coin time k - 1. Observers see step 0
// first and then the state after every full step.
SingleState run(SingleState initial, const CoinSpec& spec, int steps, const std::vector<SingleObserver>& observers = {});
PairState run(PairState initial, const PairCoinSpec& spec, int steps, const std::vector<PairObserver>& observers = {});

}  // namespace qwalk
