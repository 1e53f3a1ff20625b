#include "qwalk/evolution.hpp"

#include <string>

namespace qwalk {

namespace {

int grown_reach(int reach, const Lattice& lattice) {
    const int next = reach + 1;
    if (next > lattice.half_width()) {
        throw BoundaryError("light cone radius " + std::to_string(next) + " would exceed lattice half-width " +
                            std::to_string(lattice.half_width()));
    }
    return next;
}

void check_steps(int steps) {
    if (steps < 0) {
        throw ValidationError("step count must be >= 0, got " + std::to_string(steps));
    }
}

}  // namespace

SingleState step_single(const SingleState& state, const CoinSpec& spec, int t) {
    const Lattice& lat = state.lattice();
    const int reach = state.reach();
    SingleState next(lat);
    next.set_reach(grown_reach(reach, lat));

    const CoinMatrix c = coin_at(spec, t);
    const auto& in = state.amplitudes();
    auto& out = next.amplitudes();
    for (int x = -reach; x <= reach; ++x) {
        const int i = lat.index(x);
        const cplx up = in(2 * i);
        const cplx down = in(2 * i + 1);
        out(2 * (i + 1)) = c(0, 0) * up + c(0, 1) * down;
        out(2 * (i - 1) + 1) = c(1, 0) * up + c(1, 1) * down;
    }
    return next;
}

PairState step_pair(const PairState& state, const PairCoinSpec& spec, int t) {
    const Lattice& lat = state.lattice();
    const int reach = state.reach();
    PairState next(lat);
    next.set_reach(grown_reach(reach, lat));

    const PairCoinMatrix apart = pair_coin_at(spec, t, false);
    const PairCoinMatrix together = pair_coin_at(spec, t, true);
    const auto& in = state.amplitudes();
    auto& out = next.amplitudes();

    const int lo = lat.index(-reach);
    const int hi = lat.index(reach);
    for (int j = lo; j <= hi; ++j) {      // particle 2 site
        for (int i = lo; i <= hi; ++i) {  // particle 1 site
            Eigen::Vector4cd v;
            v(cell_index(Spin::Up, Spin::Up)) = in(2 * i, 2 * j);
            v(cell_index(Spin::Up, Spin::Down)) = in(2 * i, 2 * j + 1);
            v(cell_index(Spin::Down, Spin::Up)) = in(2 * i + 1, 2 * j);
            v(cell_index(Spin::Down, Spin::Down)) = in(2 * i + 1, 2 * j + 1);
            if (v.isZero(0.0)) continue;
            const Eigen::Vector4cd w = (i == j ? together : apart) * v;
            out(2 * (i + 1), 2 * (j + 1)) = w(cell_index(Spin::Up, Spin::Up));
            out(2 * (i + 1), 2 * (j - 1) + 1) = w(cell_index(Spin::Up, Spin::Down));
            out(2 * (i - 1) + 1, 2 * (j + 1)) = w(cell_index(Spin::Down, Spin::Up));
            out(2 * (i - 1) + 1, 2 * (j - 1) + 1) = w(cell_index(Spin::Down, Spin::Down));
        }
    }
    return next;
}

SingleState run(SingleState initial, const CoinSpec& spec, int steps, const std::vector<SingleObserver>& observers) {
    check_steps(steps);
    validate(spec);
    for (const auto& obs : observers) obs(0, initial);
    for (int k = 1; k <= steps; ++k) {
        initial = step_single(initial, spec, k - 1);
        for (const auto& obs : observers) obs(k, initial);
    }
    return initial;
}

PairState run(PairState initial, const PairCoinSpec& spec, int steps, const std::vector<PairObserver>& observers) {
    check_steps(steps);
    validate(spec.coin1);
    validate(spec.coin2);
    for (const auto& obs : observers) obs(0, initial);
    for (int k = 1; k <= steps; ++k) {
        initial = step_pair(initial, spec, k - 1);
        for (const auto& obs : observers) obs(k, initial);
    }
    return initial;
}

}  // namespace qwalk
