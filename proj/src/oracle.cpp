#include "qwalk/oracle.hpp"

#include <array>
#include <string>

namespace qwalk::oracle {

namespace {

constexpr std::array<Spin, 2> kSpins{Spin::Up, Spin::Down};

int wrap(int x, const Lattice& lat) {
    const int n = lat.half_width();
    const int span = lat.sites();
    int idx = (x + n) % span;
    if (idx < 0) idx += span;
    return idx - n;
}

}  // namespace

Eigen::MatrixXcd step_operator(const Lattice& lat, const PairCoinSpec& spec, int t) {
    if (lat.half_width() > kMaxHalfWidth) {
        throw ValidationError("oracle refuses lattice half-width " + std::to_string(lat.half_width()) + " (max " +
                              std::to_string(kMaxHalfWidth) + ")");
    }
    const int d = lat.local_dim();
    const Eigen::Matrix2cd c1 = coin_at(spec.coin1, t);
    const Eigen::Matrix2cd c2 = coin_at(spec.coin2, t);
    auto flat = [&](int x, Spin s1, int y, Spin s2) { return lat.row(x, s1) + d * lat.row(y, s2); };

    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d) * d, static_cast<Eigen::Index>(d) * d);
    for (int x = -lat.half_width(); x <= lat.half_width(); ++x) {
        for (int y = -lat.half_width(); y <= lat.half_width(); ++y) {
            for (Spin a1 : kSpins) {
                for (Spin a2 : kSpins) {
                    const int col = flat(x, a1, y, a2);
                    for (Spin b1 : kSpins) {
                        for (Spin b2 : kSpins) {
                            // <b1 b2| C |a1 a2> for this cell
                            cplx m = c1(spin_index(b1), spin_index(a1)) * c2(spin_index(b2), spin_index(a2));
                            if (x == y) {
                                if (spec.interaction == InteractionRule::IdentityOne) {
                                    m = (b1 == a1 && b2 == a2) ? cplx(1.0) : cplx(0.0);
                                } else if (spec.interaction == InteractionRule::PiPhase) {
                                    m = -m;
                                }
                            }
                            const int row =
                                flat(wrap(x + shift_of(b1), lat), b1, wrap(y + shift_of(b2), lat), b2);
                            u(row, col) += m;
                        }
                    }
                }
            }
        }
    }
    return u;
}

PairState evolve(const PairState& initial, const PairCoinSpec& spec, int steps) {
    if (steps < 0 || steps > 10) {
        throw ValidationError("oracle supports 0..10 steps, got " + std::to_string(steps));
    }
    const Lattice& lat = initial.lattice();
    Eigen::VectorXcd psi = initial.flat();
    for (int k = 1; k <= steps; ++k) {
        const Eigen::MatrixXcd u = step_operator(lat, spec, k - 1);
        psi = (u * psi).eval();
    }
    PairState out(lat);
    out.assign_flat(psi);
    return out;
}

}  // namespace qwalk::oracle
