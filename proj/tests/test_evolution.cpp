#include "qwalk/evolution.hpp"
#include "qwalk/observables.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace qwalk;

namespace {
const double h = 1.0 / std::numbers::sqrt2;
}

TEST_CASE("single step of |0,up> under Hadamard") {
    Lattice lat(2);
    auto s = step_single(make_initial_single(lat, {1.0, 0.0}), coin::Hadamard{}, 0);
    CHECK(std::abs(s.at(1, Spin::Up) - h) < 1e-15);
    CHECK(std::abs(s.at(-1, Spin::Down) - h) < 1e-15);
    CHECK(std::abs(norm(s) - 1.0) < 1e-15);
    CHECK(s.at(1, Spin::Down) == cplx(0.0));
    CHECK(s.at(-1, Spin::Up) == cplx(0.0));
    CHECK(s.at(0, Spin::Up) == cplx(0.0));
}

TEST_CASE("unbiased start, one Hadamard step") {
    // H (h, i h) = (h^2 (1 + i), h^2 (1 - i)); |.|^2 = 1/2 each.
    Lattice lat(2);
    auto s = step_single(make_initial_single(lat, unbiased_spinor()), coin::Hadamard{}, 0);
    const auto p = position_distribution(s);
    CHECK(std::abs(p(lat.index(1)) - 0.5) < 1e-15);
    CHECK(std::abs(p(lat.index(-1)) - 0.5) < 1e-15);
    CHECK(std::abs(sigma(s) - 1.0) < 1e-15);
    CHECK(std::abs(s.at(1, Spin::Up) - cplx(0.5, 0.5)) < 1e-15);
    CHECK(std::abs(s.at(-1, Spin::Down) - cplx(0.5, -0.5)) < 1e-15);
}

TEST_CASE("phi coin one period later acts as Hadamard") {
    std::mt19937 rng(3);
    Lattice lat(6);
    auto s = testing::random_single_state(lat, 3, rng);
    const auto a = step_single(s, coin::Phi{1, 50}, 50);
    const auto b = step_single(s, coin::Hadamard{}, 0);
    CHECK(testing::max_abs_diff(a.amplitudes(), b.amplitudes()) < 1e-12);

    auto ps = testing::random_pair_state(lat, 3, rng);
    const auto pa = step_pair(ps, {coin::Phi{1, 50}, coin::Phi{1, 50}, InteractionRule::PiPhase}, 100);
    const auto pb = step_pair(ps, {coin::Hadamard{}, coin::Hadamard{}, InteractionRule::PiPhase}, 0);
    CHECK(testing::max_abs_diff(pa.amplitudes(), pb.amplitudes()) < 1e-12);
}

TEST_CASE("Bell states after one non-interacting Hadamard step") {
    Lattice lat(2);
    const PairCoinSpec spec{coin::Hadamard{}, coin::Hadamard{}, InteractionRule::None};
    SUBCASE("psi-plus bunches") {
        // (0, h, h, 0) -> H x H -> (h, 0, 0, -h) on (uu, ud, du, dd), then shift.
        auto s = step_pair(make_initial_pair(lat, InitialPair::psi_plus()), spec, 0);
        PairState expected(lat);
        expected.at(1, Spin::Up, 1, Spin::Up) = h;
        expected.at(-1, Spin::Down, -1, Spin::Down) = -h;
        CHECK(testing::max_abs_diff(s.amplitudes(), expected.amplitudes()) < 1e-15);
    }
    SUBCASE("psi-minus anti-bunches") {
        auto s = step_pair(make_initial_pair(lat, InitialPair::psi_minus()), spec, 0);
        PairState expected(lat);
        expected.at(1, Spin::Up, -1, Spin::Down) = -h;
        expected.at(-1, Spin::Down, 1, Spin::Up) = h;
        CHECK(testing::max_abs_diff(s.amplitudes(), expected.amplitudes()) < 1e-15);
    }
}

TEST_CASE("identity interaction carries |0,up;0,up> rigidly") {
    const int n = 20;
    const Lattice lat = lattice_for_steps(n);
    const auto start = make_initial_pair(lat, InitialPair::from_list({{0, Spin::Up, 0, Spin::Up, 1.0}}));
    for (const auto& [c1, c2] : testing::coin_combinations()) {
        auto s = run(start, {c1, c2, InteractionRule::IdentityOne}, n);
        CHECK(s.at(n, Spin::Up, n, Spin::Up) == cplx(1.0));
        CHECK(norm(s) == 1.0);
    }
}

TEST_CASE("boundary contact is an error") {
    Lattice lat(2);
    auto s = make_initial_single(lat, unbiased_spinor());
    s = step_single(s, coin::Hadamard{}, 0);
    s = step_single(s, coin::Hadamard{}, 1);
    CHECK_THROWS_AS(step_single(s, coin::Hadamard{}, 2), BoundaryError);

    auto p = make_initial_pair(lat, InitialPair::sep());
    CHECK_THROWS_AS(run(p, {coin::Hadamard{}, coin::Hadamard{}, InteractionRule::None}, 3), BoundaryError);
    CHECK_NOTHROW(run(p, {coin::Hadamard{}, coin::Hadamard{}, InteractionRule::None}, 1));
}

TEST_CASE("step is linear") {
    std::mt19937 rng(11);
    Lattice lat(5);
    const cplx a(0.3, -1.2), b(-0.7, 0.4);
    for (const auto& [c1, c2] : testing::coin_combinations()) {
        for (auto rule : testing::kRules) {
            const PairCoinSpec spec{c1, c2, rule};
            const auto s1 = testing::random_pair_state(lat, 3, rng);
            const auto s2 = testing::random_pair_state(lat, 3, rng);
            PairState mix(lat);
            mix.amplitudes() = a * s1.amplitudes() + b * s2.amplitudes();
            mix.set_reach(3);
            const auto lhs = step_pair(mix, spec, 4);
            const Eigen::MatrixXcd rhs =
                a * step_pair(s1, spec, 4).amplitudes() + b * step_pair(s2, spec, 4).amplitudes();
            CHECK(testing::max_abs_diff(lhs.amplitudes(), rhs) < 1e-12);
        }
    }
}

TEST_CASE("norm is preserved per step") {
    const int steps = 60;
    const Lattice lat = lattice_for_steps(steps);
    for (const auto& [c1, c2] : testing::coin_combinations()) {
        for (auto rule : testing::kRules) {
            for (const auto& init : testing::standard_initials()) {
                double worst = 0.0;
                std::vector<PairObserver> obs{
                    [&worst](int, const PairState& s) { worst = std::max(worst, std::abs(norm(s) - 1.0)); }};
                run(make_initial_pair(lat, init), {c1, c2, rule}, steps, obs);
                CHECK(worst < 1e-12);
            }
        }
    }
}

TEST_CASE("norm drift over 1000 single-walker steps") {
    const int steps = 1000;
    const Lattice lat = lattice_for_steps(steps);
    for (CoinSpec c : {CoinSpec{coin::Hadamard{}}, CoinSpec{coin::Alpha{0.75, 1}}, CoinSpec{coin::Phi{3, 50}}}) {
        double worst = 0.0;
        std::vector<SingleObserver> obs{
            [&worst](int, const SingleState& s) { worst = std::max(worst, std::abs(norm(s) - 1.0)); }};
        run(make_initial_single(lat, unbiased_spinor()), c, steps, obs);
        CHECK(worst < 1e-9);
    }
}

TEST_CASE("non-interacting Sep stays a product of single walks") {
    const int steps = 40;
    const Lattice lat = lattice_for_steps(steps);
    for (const auto& [c1, c2] : testing::coin_combinations()) {
        auto pair = make_initial_pair(lat, InitialPair::sep());
        auto w1 = make_initial_single(lat, unbiased_spinor());
        auto w2 = make_initial_single(lat, unbiased_spinor());
        const PairCoinSpec spec{c1, c2, InteractionRule::None};
        double worst = 0.0;
        for (int k = 1; k <= steps; ++k) {
            pair = step_pair(pair, spec, k - 1);
            w1 = step_single(w1, c1, k - 1);
            w2 = step_single(w2, c2, k - 1);
            const auto p = joint_distribution(pair).p;
            const Eigen::MatrixXd prod = position_distribution(w1) * position_distribution(w2).transpose();
            worst = std::max(worst, (p - prod).cwiseAbs().maxCoeff());
        }
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("coin2 without spin mixing leaves particle 2's spin populations alone") {
    // General(0,0,0) = diag(1, -1): particle 2 keeps its spin, so it moves
    // ballistically in the direction it started with.
    const int steps = 10;
    const Lattice lat = lattice_for_steps(steps);
    const PairCoinSpec spec{coin::Hadamard{}, coin::General{0.0, 0.0, 0.0}, InteractionRule::None};
    auto s = run(make_initial_pair(lat, InitialPair::from_list({{0, Spin::Up, 0, Spin::Down, 1.0}})), spec, steps);
    const auto p = joint_distribution(s);
    const auto m = marginals(p);
    CHECK(std::abs(m.py(lat.index(-steps)) - 1.0) < 1e-12);
    double down2 = 0.0;
    for (int x = -steps; x <= steps; ++x)
        for (Spin a : {Spin::Up, Spin::Down}) down2 += std::norm(s.at(x, a, -steps, Spin::Down));
    CHECK(std::abs(down2 - 1.0) < 1e-12);
    // Particle 1 did spread under its Hadamard coin.
    CHECK(m.px.maxCoeff() < 0.5);
}

TEST_CASE("run invokes observers at step 0 and after each step") {
    Lattice lat(4);
    std::vector<int> seen;
    std::vector<PairObserver> obs{[&seen](int k, const PairState&) { seen.push_back(k); }};
    const auto init = make_initial_pair(lat, InitialPair::sep());
    auto out = run(init, {coin::Hadamard{}, coin::Hadamard{}, InteractionRule::None}, 0, obs);
    CHECK(seen == std::vector<int>{0});
    CHECK(out.amplitudes() == init.amplitudes());

    seen.clear();
    run(init, {coin::Hadamard{}, coin::Hadamard{}, InteractionRule::None}, 3, obs);
    CHECK(seen == std::vector<int>{0, 1, 2, 3});
    CHECK_THROWS_AS(run(init, {coin::Hadamard{}, coin::Hadamard{}, InteractionRule::None}, -1), ValidationError);
}

TEST_CASE("100 steps of Sep under alpha 1.25 coins keep unit norm") {
    const int steps = 100;
    const Lattice lat = lattice_for_steps(steps);
    double worst = 0.0;
    std::vector<PairObserver> obs{[&worst](int, const PairState& s) { worst = std::max(worst, std::abs(norm(s) - 1.0)); }};
    run(make_initial_pair(lat, InitialPair::sep()), {coin::Alpha{1.25, 1}, coin::Alpha{1.25, 1}, InteractionRule::None},
        steps, obs);
    CHECK(worst < 1e-12);
}
