#pragma once

#include <span>
#include <utility>

namespace qwalk {

// Least-squares slope of log(sigma) against log(n) over n_min <= n <= n_max.
// Throws ValidationError for a bad window or when any sigma in it is <= 0.
double fit_exponent(std::span<const std::pair<int, double>> series, int n_min, int n_max);

}  // namespace qwalk
