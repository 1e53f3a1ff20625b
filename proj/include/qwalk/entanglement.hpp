#pragma once

#include "qwalk/lattice.hpp"

#include <Eigen/Dense>

#include <stdexcept>
#include <vector>

namespace qwalk {

// Eigenvalues of the reduced density matrix rho_1, descending.
struct SchmidtSpectrum {
    std::vector<double> lambdas;

    double sum() const;
};

class SpectrumError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Eigenvalues above -kClampFloor are clamped to zero; anything lower is an error.
inline constexpr double kClampFloor = 1e-12;
// Terms with lambda <= kEntropyCutoff contribute nothing (0 log 0 = 0), and so
// do terms within kEntropyCutoff of 1, so a product state reads exactly 0.
inline constexpr double kEntropyCutoff = 1e-12;

// A[(x,s1),(y,s2)] = a_{x s1 y s2}; rho_1 = A A^dagger.
Eigen::MatrixXcd bipartite_matrix(const PairState& state);

// lambda_i = sigma_i^2 from the singular values of A. Rows and columns that
// are identically zero (outside the light cone, or on the wrong parity
// sublattice) are dropped first; they only contribute zero singular values.
SchmidtSpectrum schmidt_spectrum(const Eigen::MatrixXcd& a);

// -sum lambda log2 lambda, in bits.
double entropy(const SchmidtSpectrum& spectrum);

double entanglement_entropy(const PairState& state);

}  // namespace qwalk
