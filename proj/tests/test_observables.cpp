#include "qwalk/evolution.hpp"
#include "qwalk/observables.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace qwalk;

namespace {

JointDistribution after_one_hadamard_step(const InitialPair& init) {
    const Lattice lat(2);
    return joint_distribution(
        step_pair(make_initial_pair(lat, init), {coin::Hadamard{}, coin::Hadamard{}, InteractionRule::None}, 0));
}

}  // namespace

TEST_CASE("fresh Sep sits at the origin") {
    const auto d = joint_distribution(make_initial_pair(Lattice(3), InitialPair::sep()));
    CHECK(d.at(0, 0) == 1.0);
    CHECK(d.p.sum() == 1.0);
    CHECK(correlation(d) == 0.0);
    CHECK(avg_separation(d) == 0.0);
    const auto m = marginals(d);
    CHECK(m.px(3) == 1.0);
    CHECK(m.py(3) == 1.0);
    CHECK(m.px.sum() == 1.0);
}

TEST_CASE("origin-localized walker has zero spread") {
    CHECK(sigma(make_initial_single(Lattice(4), unbiased_spinor())) == 0.0);
}

TEST_CASE("psi-plus and psi-minus after one step") {
    const auto plus = after_one_hadamard_step(InitialPair::psi_plus());
    CHECK(std::abs(plus.at(1, 1) - 0.5) < 1e-12);
    CHECK(std::abs(plus.at(-1, -1) - 0.5) < 1e-12);
    CHECK(std::abs(correlation(plus) - 1.0) < 1e-12);
    CHECK(std::abs(avg_separation(plus)) < 1e-12);

    const auto minus = after_one_hadamard_step(InitialPair::psi_minus());
    CHECK(std::abs(minus.at(1, -1) - 0.5) < 1e-12);
    CHECK(std::abs(minus.at(-1, 1) - 0.5) < 1e-12);
    CHECK(std::abs(correlation(minus) + 1.0) < 1e-12);
    CHECK(std::abs(avg_separation(minus) - 2.0) < 1e-12);
}

TEST_CASE("product distribution has no correlation") {
    const Lattice lat(3);
    Eigen::VectorXd a(7), b(7);
    a << 0.1, 0.0, 0.3, 0.2, 0.0, 0.25, 0.15;
    b << 0.0, 0.5, 0.0, 0.1, 0.1, 0.0, 0.3;
    JointDistribution d{lat, a * b.transpose()};
    CHECK(std::abs(correlation(d)) < 1e-12);
    const auto m = marginals(d);
    CHECK((m.px - a).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((m.py - b).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("diagonal distributions have zero separation") {
    const Lattice lat(2);
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(5, 5);
    p(0, 0) = 0.2;
    p(2, 2) = 0.5;
    p(4, 4) = 0.3;
    CHECK(avg_separation(JointDistribution{lat, p}) == 0.0);
}

TEST_CASE("inequalities, normalization and symmetry along evolutions") {
    const int steps = 40;
    const Lattice lat = lattice_for_steps(steps);
    for (const auto& [c1, c2] : testing::coin_combinations()) {
        const bool same_coins = c1 == c2;
        for (auto rule : testing::kRules) {
            for (const auto& init : testing::standard_initials()) {
                const bool bell = init.kind != InitialKind::Sep;
                double worst_norm = 0.0, worst_cs = -1.0, worst_tri = -1.0, worst_sym = 0.0, worst_marg = 0.0;
                std::vector<PairObserver> obs{[&](int, const PairState& s) {
                    const auto d = joint_distribution(s);
                    const auto mo = moments(d);
                    const auto m = marginals(d);
                    worst_norm = std::max(worst_norm, std::abs(d.p.sum() - 1.0));
                    worst_marg = std::max({worst_marg, std::abs(m.px.sum() - 1.0), std::abs(m.py.sum() - 1.0)});
                    worst_cs = std::max(worst_cs, std::abs(correlation(d)) - std::sqrt(mo.var_x * mo.var_y) - 1e-12);
                    worst_tri = std::max(worst_tri, avg_separation(d) - mo.mean_abs_x - mo.mean_abs_y - 1e-12);
                    if (bell && same_coins) {
                        worst_sym = std::max(worst_sym, (d.p - d.p.transpose()).cwiseAbs().maxCoeff());
                    }
                }};
                run(make_initial_pair(lat, init), {c1, c2, rule}, steps, obs);
                CHECK(worst_norm < 1e-10);
                CHECK(worst_marg < 1e-10);
                CHECK(worst_cs <= 0.0);
                CHECK(worst_tri <= 0.0);
                CHECK(worst_sym < 1e-12);
            }
        }
    }
}

TEST_CASE("symmetric start and symmetric coins keep the mean at zero") {
    // Real coins with the (1, i) spinor give a mirror-symmetric walk.
    const int steps = 50;
    const Lattice lat = lattice_for_steps(steps);
    auto s = run(make_initial_pair(lat, InitialPair::sep()), {coin::Alpha{0.5, 1}, coin::Alpha{0.5, 1}, InteractionRule::None},
                 steps);
    const auto mo = moments(joint_distribution(s));
    CHECK(std::abs(mo.mean_x) < 1e-10);
    CHECK(std::abs(mo.mean_y) < 1e-10);
    auto w = run(make_initial_single(lat, unbiased_spinor()), coin::Hadamard{}, steps);
    const auto p = position_distribution(w);
    double mean = 0.0;
    for (int x = -steps; x <= steps; ++x) mean += x * p(lat.index(x));
    CHECK(std::abs(mean) < 1e-10);
}

TEST_CASE("identity interaction pins a quarter of the mass to each far corner") {
    const int n = 100;
    const Lattice lat = lattice_for_steps(n);
    for (const auto& [c1, c2] : testing::coin_combinations()) {
        const auto d = joint_distribution(run(make_initial_pair(lat, InitialPair::sep()), {c1, c2, InteractionRule::IdentityOne}, n));
        CHECK(std::abs(d.at(n, n) - 0.25) < 1e-10);
        CHECK(std::abs(d.at(-n, -n) - 0.25) < 1e-10);
    }
}
