#pragma once

#include "qwalk/lattice.hpp"

#include <Eigen/Dense>

#include <optional>

namespace qwalk {

// P(x, y) stored at (index(x), index(y)).
struct JointDistribution {
    Lattice lattice;
    Eigen::MatrixXd p;

    double at(int x, int y) const { return p(lattice.index(x), lattice.index(y)); }
};

struct Marginals {
    Eigen::VectorXd px;  // particle 1
    Eigen::VectorXd py;  // particle 2
};

// One timeseries row. Pair columns are empty in single mode; entropy is
// empty on steps skipped by the entropy stride.
struct ObservableRecord {
    int step = 0;
    std::optional<double> sigma;
    std::optional<double> c12;
    std::optional<double> delta12;
    std::optional<double> entropy;
};

JointDistribution joint_distribution(const PairState& state);
Marginals marginals(const JointDistribution& dist);

// P(x) of a single walker, indexed like the lattice.
Eigen::VectorXd position_distribution(const SingleState& state);

double sigma(const SingleState& state);

// <xy> - <x><y>
double correlation(const JointDistribution& dist);

// <|x - y|>
double avg_separation(const JointDistribution& dist);

struct Moments {
    double mean_x = 0.0;
    double mean_y = 0.0;
    double var_x = 0.0;
    double var_y = 0.0;
    double mean_abs_x = 0.0;
    double mean_abs_y = 0.0;
};

Moments moments(const JointDistribution& dist);

}  // namespace qwalk
