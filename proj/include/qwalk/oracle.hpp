#pragma once

#include "qwalk/coins.hpp"
#include "qwalk/lattice.hpp"

#include <Eigen/Dense>

namespace qwalk::oracle {

// Largest half-width for which the dense step operator is built.
inline constexpr int kMaxHalfWidth = 12;

// Dense U_t = S * C_t over the full pair space, in PairState::flat() order.
// C_t is assembled element by element from the two 2x2 coins, with the
// same-site substitution applied per cell; S is the spin-conditioned shift
// with periodic wrap at the lattice edge so that U_t is a permutation of
// unitary blocks (states inside the light cone never reach the wrap).
Eigen::MatrixXcd step_operator(const Lattice& lattice, const PairCoinSpec& spec, int t);

// Evolves by explicit dense matrix-vector products. Refuses lattices wider
// than kMaxHalfWidth and more than 10 steps.
PairState evolve(const PairState& initial, const PairCoinSpec& spec, int steps);

}  // namespace qwalk::oracle
