#ifndef EPSPECTRA_STATS_HPP
#define EPSPECTRA_STATS_HPP

#include <cstddef>
#include <span>
#include <stdexcept>

namespace epspectra {

// Slope of the least-squares line through (x_i, y_i).
inline double least_squares_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("least_squares_slope: need matching samples, at least two");
    const double n = double(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0)
        throw std::invalid_argument("least_squares_slope: degenerate abscissae");
    return (n * sxy - sx * sy) / denom;
}

}  // namespace epspectra

#endif
