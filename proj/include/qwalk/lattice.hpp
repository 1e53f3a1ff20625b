#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

namespace qwalk {

using cplx = std::complex<double>;

// Raised when a caller hands in a configuration or state that breaks a
// precondition. Evolution-time failures use BoundaryError instead.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The light cone reached the edge of the lattice.
class BoundaryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Spin : int { Up = 0, Down = 1 };

constexpr int shift_of(Spin s) noexcept { return s == Spin::Up ? +1 : -1; }

constexpr int spin_index(Spin s) noexcept { return static_cast<int>(s); }

// Sites -N..+N stored at indices 0..2N.
class Lattice {
public:
    explicit Lattice(int half_width);

    int half_width() const noexcept { return half_width_; }
    int sites() const noexcept { return 2 * half_width_ + 1; }
    // Rows of the (position, spin) space: 2(2N+1).
    int local_dim() const noexcept { return 2 * sites(); }

    bool contains(int x) const noexcept { return x >= -half_width_ && x <= half_width_; }
    int index(int x) const;
    int position(int idx) const;

    // Row of (x, s) in the single-particle space; spin is the fast index.
    int row(int x, Spin s) const { return 2 * index(x) + spin_index(s); }

    friend bool operator==(const Lattice&, const Lattice&) = default;

private:
    int half_width_;
};

// One walker: amplitudes over (position, spin), length 2(2N+1).
class SingleState {
public:
    explicit SingleState(Lattice lattice);

    const Lattice& lattice() const noexcept { return lattice_; }
    // Largest |x| that may carry amplitude. Evolution grows this by one per step.
    int reach() const noexcept { return reach_; }
    void set_reach(int r);

    cplx& at(int x, Spin s) { return amp_(lattice_.row(x, s)); }
    const cplx& at(int x, Spin s) const { return amp_(lattice_.row(x, s)); }

    Eigen::VectorXcd& amplitudes() noexcept { return amp_; }
    const Eigen::VectorXcd& amplitudes() const noexcept { return amp_; }

private:
    Lattice lattice_;
    Eigen::VectorXcd amp_;
    int reach_ = 0;
};

// Two walkers. amp(row(x,s1), row(y,s2)) holds a_{x s1 y s2}; rows belong to
// particle 1 and columns to particle 2, so the matrix is the bipartite
// coefficient matrix directly.
class PairState {
public:
    explicit PairState(Lattice lattice);

    const Lattice& lattice() const noexcept { return lattice_; }
    int reach() const noexcept { return reach_; }
    void set_reach(int r);

    cplx& at(int x, Spin s1, int y, Spin s2) { return amp_(lattice_.row(x, s1), lattice_.row(y, s2)); }
    const cplx& at(int x, Spin s1, int y, Spin s2) const {
        return amp_(lattice_.row(x, s1), lattice_.row(y, s2));
    }

    Eigen::MatrixXcd& amplitudes() noexcept { return amp_; }
    const Eigen::MatrixXcd& amplitudes() const noexcept { return amp_; }

    // Flattened copy, column-major, for dense-operator work.
    Eigen::VectorXcd flat() const;
    void assign_flat(const Eigen::VectorXcd& v);

private:
    Lattice lattice_;
    Eigen::MatrixXcd amp_;
    int reach_ = 0;
};

struct Spinor {
    cplx up;
    cplx down;
};

// (1/sqrt2)(|up> + i|down>), the unbiased start used for every walker.
Spinor unbiased_spinor();

enum class InitialKind { Sep, PsiPlus, PsiMinus, Custom };

struct PairAmplitude {
    int x;
    Spin s1;
    int y;
    Spin s2;
    cplx value;
};

struct InitialPair {
    InitialKind kind = InitialKind::Sep;
    std::vector<PairAmplitude> custom;  // only read for Custom

    static InitialPair sep() { return {InitialKind::Sep, {}}; }
    static InitialPair psi_plus() { return {InitialKind::PsiPlus, {}}; }
    static InitialPair psi_minus() { return {InitialKind::PsiMinus, {}}; }
    static InitialPair from_list(std::vector<PairAmplitude> list) { return {InitialKind::Custom, std::move(list)}; }
};

SingleState make_initial_single(const Lattice& lattice, Spinor spinor);
PairState make_initial_pair(const Lattice& lattice, const InitialPair& which);

double norm(const SingleState& state);
double norm(const PairState& state);

// Smallest r such that every nonzero amplitude sits at |x| <= r (and |y| <= r).
int support_radius(const SingleState& state);
int support_radius(const PairState& state);

std::string to_string(InitialKind kind);
InitialKind parse_initial_kind(const std::string& name);

}  // namespace qwalk
