#include "qwalk/observables.hpp"

#include <algorithm>
#include <cmath>

namespace qwalk {

namespace {

Eigen::VectorXd positions(const Lattice& lat) {
    return Eigen::VectorXd::LinSpaced(lat.sites(), -lat.half_width(), lat.half_width());
}

}  // namespace

JointDistribution joint_distribution(const PairState& state) {
    const Lattice& lat = state.lattice();
    const auto& a = state.amplitudes();
    const int n = lat.sites();
    Eigen::MatrixXd p(n, n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            p(i, j) = std::norm(a(2 * i, 2 * j)) + std::norm(a(2 * i, 2 * j + 1)) + std::norm(a(2 * i + 1, 2 * j)) +
                      std::norm(a(2 * i + 1, 2 * j + 1));
        }
    }
    return {lat, std::move(p)};
}

Marginals marginals(const JointDistribution& dist) {
    return {dist.p.rowwise().sum(), dist.p.colwise().sum().transpose()};
}

Eigen::VectorXd position_distribution(const SingleState& state) {
    const auto& a = state.amplitudes();
    Eigen::VectorXd p(state.lattice().sites());
    for (int i = 0; i < p.size(); ++i) {
        p(i) = std::norm(a(2 * i)) + std::norm(a(2 * i + 1));
    }
    return p;
}

double sigma(const SingleState& state) {
    const Eigen::VectorXd p = position_distribution(state);
    const Eigen::VectorXd x = positions(state.lattice());
    const double mean = p.dot(x);
    const double second = p.dot(x.cwiseProduct(x));
    return std::sqrt(std::max(0.0, second - mean * mean));
}

double correlation(const JointDistribution& dist) {
    const Eigen::VectorXd x = positions(dist.lattice);
    const Marginals m = marginals(dist);
    const double mean_xy = x.dot(dist.p * x);
    return mean_xy - m.px.dot(x) * m.py.dot(x);
}

double avg_separation(const JointDistribution& dist) {
    const int n = dist.lattice.sites();
    double sum = 0.0;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            sum += std::abs(i - j) * dist.p(i, j);
    return sum;
}

Moments moments(const JointDistribution& dist) {
    const Eigen::VectorXd x = positions(dist.lattice);
    const Marginals m = marginals(dist);
    Moments out;
    out.mean_x = m.px.dot(x);
    out.mean_y = m.py.dot(x);
    const Eigen::VectorXd x2 = x.cwiseProduct(x);
    out.var_x = m.px.dot(x2) - out.mean_x * out.mean_x;
    out.var_y = m.py.dot(x2) - out.mean_y * out.mean_y;
    out.mean_abs_x = m.px.dot(x.cwiseAbs());
    out.mean_abs_y = m.py.dot(x.cwiseAbs());
    return out;
}

}  // namespace qwalk
