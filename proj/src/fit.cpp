#include "qwalk/fit.hpp"
#include "qwalk/lattice.hpp"

#include <cmath>
#include <string>

namespace qwalk {

double fit_exponent(std::span<const std::pair<int, double>> series, int n_min, int n_max) {
    if (n_min < 1 || n_max <= n_min) {
        throw ValidationError("fit window needs 1 <= n_min < n_max, got [" + std::to_string(n_min) + ", " +
                              std::to_string(n_max) + "]");
    }
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    int count = 0;
    for (const auto& [n, s] : series) {
        if (n < n_min || n > n_max) continue;
        if (!(s > 0.0)) {
            throw ValidationError("sigma(" + std::to_string(n) + ") = " + std::to_string(s) +
                                  " is not positive; log-log fit undefined");
        }
        const double lx = std::log(static_cast<double>(n));
        const double ly = std::log(s);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++count;
    }
    if (count < 2) {
        throw ValidationError("fit window holds fewer than two points");
    }
    const double denom = count * sxx - sx * sx;
    return (count * sxy - sx * sy) / denom;
}

}  // namespace qwalk
