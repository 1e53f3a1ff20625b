#pragma once

#include "qwalk/lattice.hpp"

#include <Eigen/Dense>

#include <string>
#include <variant>

namespace qwalk {

namespace coin {

struct Hadamard {
    friend bool operator==(const Hadamard&, const Hadamard&) = default;
};
// [[cos t, e^{i p1} sin t], [e^{i p2} sin t, -e^{i(p1+p2)} cos t]]
// [[cos t, e^{-i p1} sin t], [e^{i p2} sin t, -e^{i(p1+p2)} cos t]]
struct General {
    double theta = 0.0;
    double phi1 = 0.0;
    double phi2 = 0.0;
    friend bool operator==(const General&, const General&) = default;
};

// Real coin with cos theta(t) = (1/sqrt2) (tau / (t + tau))^alpha.
struct Alpha {
    double alpha = 0.0;
    int tau = 1;
    friend bool operator==(const Alpha&, const Alpha&) = default;
};

// Hadamard preceded by diag(e^{-i Phi}, e^{i Phi}), Phi(t) = 2 pi (q/p) t.
// q/p is kept exactly as given.
struct Phi {
    int q = 1;
    int p = 1;
    friend bool operator==(const Phi&, const Phi&) = default;
};

}  // namespace coin

using CoinSpec = std::variant<coin::Hadamard, coin::General, coin::Alpha, coin::Phi>;

// Throws ValidationError for alpha < 0, tau < 1, q < 1 or p < 1.
void validate(const CoinSpec& spec);

using CoinMatrix = Eigen::Matrix2cd;
using PairCoinMatrix = Eigen::Matrix4cd;

enum class InteractionRule { None, IdentityOne, PiPhase };

struct PairCoinSpec {
    CoinSpec coin1 = coin::Hadamard{};  // acts on particle 1 (x, s1)
    CoinSpec coin2 = coin::Hadamard{};  // acts on particle 2 (y, s2)
    InteractionRule interaction = InteractionRule::None;
};

// Coin applied at dimensionless time t; step k (k >= 1) uses t = k - 1.
CoinMatrix coin_at(const CoinSpec& spec, int t);

// Index of (s1, s2) in the 4-component cell vector: 2*s1 + s2, i.e.
// (up up, up down, down up, down down) with particle 1 as the major index.
// The pair coin is then coin1 (x) coin2 as a plain Kronecker product.
constexpr int cell_index(Spin s1, Spin s2) noexcept { return 2 * spin_index(s1) + spin_index(s2); }

PairCoinMatrix kron(const CoinMatrix& a, const CoinMatrix& b);

// same_site is x == y before the coin acts.
PairCoinMatrix pair_coin_at(const PairCoinSpec& spec, int t, bool same_site);

// Textual forms: hadamard | alpha:A[:TAU] | phi:Q/P | general:THETA:PHI1:PHI2
CoinSpec parse_coin(const std::string& text);
std::string to_string(const CoinSpec& spec);

InteractionRule parse_interaction(const std::string& text);
std::string to_string(InteractionRule rule);

}  // namespace qwalk
