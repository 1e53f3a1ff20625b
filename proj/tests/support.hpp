#pragma once

#include "qwalk/coins.hpp"
#include "qwalk/lattice.hpp"

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <random>
#include <vector>

namespace qwalk::testing {

inline double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

// Random normalized pair state supported on |x|, |y| <= radius.
inline PairState random_pair_state(const Lattice& lat, int radius, std::mt19937& rng) {
    std::normal_distribution<double> g;
    PairState s(lat);
    for (int x = -radius; x <= radius; ++x)
        for (int y = -radius; y <= radius; ++y)
            for (Spin a : {Spin::Up, Spin::Down})
                for (Spin b : {Spin::Up, Spin::Down}) s.at(x, a, y, b) = cplx(g(rng), g(rng));
    s.amplitudes() /= std::sqrt(norm(s));
    s.set_reach(radius);
    return s;
}

inline SingleState random_single_state(const Lattice& lat, int radius, std::mt19937& rng) {
    std::normal_distribution<double> g;
    SingleState s(lat);
    for (int x = -radius; x <= radius; ++x)
        for (Spin a : {Spin::Up, Spin::Down}) s.at(x, a) = cplx(g(rng), g(rng));
    s.amplitudes() /= std::sqrt(norm(s));
    s.set_reach(radius);
    return s;
}

// The four pairings studied for two walkers, Hadamard / alpha / phi mixes.
inline std::vector<std::pair<CoinSpec, CoinSpec>> coin_combinations() {
    return {
        {coin::Alpha{0.5, 1}, coin::Alpha{0.5, 1}},
        {coin::Alpha{0.0, 1}, coin::Alpha{1.25, 1}},
        {coin::Phi{1, 50}, coin::Phi{1, 50}},
        {coin::Hadamard{}, coin::Phi{1, 50}},
    };
}

inline constexpr std::array<InteractionRule, 3> kRules{InteractionRule::None, InteractionRule::IdentityOne,
                                                       InteractionRule::PiPhase};

inline std::array<InitialPair, 3> standard_initials() {
    return {InitialPair::sep(), InitialPair::psi_plus(), InitialPair::psi_minus()};
}

}  // namespace qwalk::testing
