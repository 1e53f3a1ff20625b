#include "qwalk/entanglement.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace qwalk {

namespace {

constexpr double kTraceTolerance = 1e-9;

std::vector<Eigen::Index> nonzero_rows(const Eigen::MatrixXcd& a) {
    std::vector<Eigen::Index> keep;
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        if (!a.row(r).isZero(0.0)) keep.push_back(r);
    }
    return keep;
}

std::vector<Eigen::Index> nonzero_cols(const Eigen::MatrixXcd& a) {
    std::vector<Eigen::Index> keep;
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
        if (!a.col(c).isZero(0.0)) keep.push_back(c);
    }
    return keep;
}

template <class Solver>
Eigen::VectorXd checked_values(const Solver& svd, const Eigen::MatrixXcd& m, const char* name) {
    if (svd.info() != Eigen::Success) {
        std::ostringstream msg;
        msg << name << " did not converge on a " << m.rows() << "x" << m.cols() << " matrix (info="
            << static_cast<int>(svd.info()) << ")";
        throw SpectrumError(msg.str());
    }
    return svd.singularValues();
}

// Divide-and-conquer first; Eigen's BDCSVD occasionally returns NaN on
// matrices with many clustered singular values, so fall back to Jacobi.
Eigen::VectorXd singular_values(const Eigen::MatrixXcd& m) {
    Eigen::VectorXd sv = checked_values(Eigen::BDCSVD<Eigen::MatrixXcd>(m), m, "BDCSVD");
    if (sv.allFinite()) return sv;
    return checked_values(Eigen::JacobiSVD<Eigen::MatrixXcd>(m), m, "JacobiSVD");
}

}  // namespace

double SchmidtSpectrum::sum() const { return std::accumulate(lambdas.begin(), lambdas.end(), 0.0); }

Eigen::MatrixXcd bipartite_matrix(const PairState& state) { return state.amplitudes(); }

SchmidtSpectrum schmidt_spectrum(const Eigen::MatrixXcd& a) {
    const double trace = a.squaredNorm();
    if (std::abs(trace - 1.0) > kTraceTolerance) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "bipartite matrix is not normalized: trace(A A^dagger) = " << trace;
        throw SpectrumError(msg.str());
    }

    const auto rows = nonzero_rows(a);
    const auto cols = nonzero_cols(a);
    Eigen::MatrixXcd sub = a(rows, cols);
    if (sub.rows() < sub.cols()) sub.transposeInPlace();

    Eigen::VectorXd sv = singular_values(sub);
    SchmidtSpectrum out;
    out.lambdas.reserve(static_cast<std::size_t>(sv.size()));
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        double lambda = sv(i) * sv(i);
        if (lambda < -kClampFloor || !std::isfinite(lambda)) {
            throw SpectrumError("invalid Schmidt coefficient " + std::to_string(lambda));
        }
        out.lambdas.push_back(std::clamp(lambda, 0.0, 1.0));
    }
    std::sort(out.lambdas.begin(), out.lambdas.end(), std::greater<>());
    return out;
}

double entropy(const SchmidtSpectrum& spectrum) {
    double e = 0.0;
    for (double lambda : spectrum.lambdas) {
        if (lambda > kEntropyCutoff && lambda < 1.0 - kEntropyCutoff) e -= lambda * std::log2(lambda);
    }
    return std::max(0.0, e);
}

double entanglement_entropy(const PairState& state) { return entropy(schmidt_spectrum(bipartite_matrix(state))); }

}  // namespace qwalk
