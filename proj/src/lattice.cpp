#include "qwalk/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qwalk {

namespace {

constexpr double kNormTolerance = 1e-12;

}  // namespace

Lattice::Lattice(int half_width) : half_width_(half_width) {
    if (half_width < 0) {
        throw ValidationError("lattice half-width must be >= 0, got " + std::to_string(half_width));
    }
}

int Lattice::index(int x) const {
    if (!contains(x)) {
        throw ValidationError("position " + std::to_string(x) + " outside lattice [-" +
                              std::to_string(half_width_) + ", " + std::to_string(half_width_) + "]");
    }
    return x + half_width_;
}

int Lattice::position(int idx) const {
    if (idx < 0 || idx >= sites()) {
        throw ValidationError("lattice index " + std::to_string(idx) + " out of range");
    }
    return idx - half_width_;
}

SingleState::SingleState(Lattice lattice)
    : lattice_(lattice), amp_(Eigen::VectorXcd::Zero(lattice.local_dim())) {}

void SingleState::set_reach(int r) {
    if (r < 0 || r > lattice_.half_width()) {
        throw BoundaryError("reach " + std::to_string(r) + " exceeds lattice half-width " +
                            std::to_string(lattice_.half_width()));
    }
    reach_ = r;
}

PairState::PairState(Lattice lattice)
    : lattice_(lattice), amp_(Eigen::MatrixXcd::Zero(lattice.local_dim(), lattice.local_dim())) {}

void PairState::set_reach(int r) {
    if (r < 0 || r > lattice_.half_width()) {
        throw BoundaryError("reach " + std::to_string(r) + " exceeds lattice half-width " +
                            std::to_string(lattice_.half_width()));
    }
    reach_ = r;
}

Eigen::VectorXcd PairState::flat() const { return amp_.reshaped(); }

void PairState::assign_flat(const Eigen::VectorXcd& v) {
    if (v.size() != amp_.size()) {
        throw ValidationError("flat vector has wrong dimension");
    }
    amp_ = v.reshaped(amp_.rows(), amp_.cols());
    reach_ = support_radius(*this);
}

Spinor unbiased_spinor() {
    const double h = 1.0 / std::numbers::sqrt2;
    return {cplx(h, 0.0), cplx(0.0, h)};
}

SingleState make_initial_single(const Lattice& lattice, Spinor spinor) {
    const double n = std::norm(spinor.up) + std::norm(spinor.down);
    if (std::abs(n - 1.0) > kNormTolerance) {
        throw ValidationError("initial spinor is not normalized (|c_up|^2 + |c_down|^2 = " + std::to_string(n) + ")");
    }
    SingleState state(lattice);
    state.at(0, Spin::Up) = spinor.up;
    state.at(0, Spin::Down) = spinor.down;
    return state;
}

PairState make_initial_pair(const Lattice& lattice, const InitialPair& which) {
    PairState state(lattice);
    const double h = 1.0 / std::numbers::sqrt2;
    const cplx i(0.0, 1.0);
    switch (which.kind) {
    case InitialKind::Sep:
        state.at(0, Spin::Up, 0, Spin::Up) = 0.5;
        state.at(0, Spin::Up, 0, Spin::Down) = 0.5 * i;
        state.at(0, Spin::Down, 0, Spin::Up) = 0.5 * i;
        state.at(0, Spin::Down, 0, Spin::Down) = -0.5;
        break;
    case InitialKind::PsiPlus:
        state.at(0, Spin::Up, 0, Spin::Down) = h;
        state.at(0, Spin::Down, 0, Spin::Up) = h;
        break;
    case InitialKind::PsiMinus:
        state.at(0, Spin::Up, 0, Spin::Down) = h;
        state.at(0, Spin::Down, 0, Spin::Up) = -h;
        break;
    case InitialKind::Custom: {
        if (which.custom.empty()) {
            throw ValidationError("custom initial state has no amplitudes");
        }
        for (const auto& a : which.custom) {
            if (!lattice.contains(a.x) || !lattice.contains(a.y)) {
                throw ValidationError("custom amplitude at (" + std::to_string(a.x) + ", " + std::to_string(a.y) +
                                      ") lies outside the lattice");
            }
            state.at(a.x, a.s1, a.y, a.s2) += a.value;
        }
        const double n = norm(state);
        if (std::abs(n - 1.0) > kNormTolerance) {
            throw ValidationError("custom initial state is not normalized (norm = " + std::to_string(n) + ")");
        }
        state.set_reach(support_radius(state));
        break;
    }
    }
    return state;
}

double norm(const SingleState& state) { return state.amplitudes().squaredNorm(); }

double norm(const PairState& state) { return state.amplitudes().squaredNorm(); }

int support_radius(const SingleState& state) {
    const Lattice& lat = state.lattice();
    int r = 0;
    for (int idx = 0; idx < lat.sites(); ++idx) {
        const auto& a = state.amplitudes();
        if (a(2 * idx) != cplx(0.0) || a(2 * idx + 1) != cplx(0.0)) {
            r = std::max(r, std::abs(lat.position(idx)));
        }
    }
    return r;
}

int support_radius(const PairState& state) {
    const Lattice& lat = state.lattice();
    const auto& a = state.amplitudes();
    int r = 0;
    for (int col = 0; col < a.cols(); ++col) {
        for (int row = 0; row < a.rows(); ++row) {
            if (a(row, col) != cplx(0.0)) {
                r = std::max({r, std::abs(lat.position(row / 2)), std::abs(lat.position(col / 2))});
            }
        }
    }
    return r;
}

std::string to_string(InitialKind kind) {
    switch (kind) {
    case InitialKind::Sep: return "sep";
    case InitialKind::PsiPlus: return "psi-plus";
    case InitialKind::PsiMinus: return "psi-minus";
    case InitialKind::Custom: return "custom";
    }
    return "unknown";
}

InitialKind parse_initial_kind(const std::string& name) {
    if (name == "sep") return InitialKind::Sep;
    if (name == "psi-plus") return InitialKind::PsiPlus;
    if (name == "psi-minus") return InitialKind::PsiMinus;
    throw ValidationError("unknown initial state '" + name + "' (expected sep, psi-plus or psi-minus)");
}

}  // namespace qwalk
