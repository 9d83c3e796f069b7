#include "epspectra/grid.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace epspectra {

PeriodicGrid::PeriodicGrid(int dim, int points_per_axis, double period)
    : dim_(dim), n_(points_per_axis), period_(period) {
    if (dim < 1 || dim > max_dim)
        throw std::invalid_argument("PeriodicGrid: dim must be in [1, " +
                                    std::to_string(max_dim) + "], got " +
                                    std::to_string(dim));
    if (n_ < 4 || n_ % 2 != 0 || (n_ & (n_ - 1)) != 0)
        throw std::invalid_argument(
            "PeriodicGrid: points per axis must be an even power of two >= 4, got " +
            std::to_string(n_));
    if (!(period > 0.0) || !std::isfinite(period))
        throw std::invalid_argument("PeriodicGrid: period must be positive and finite");
    total_ = 1;
    for (int a = 0; a < dim_; ++a) {
        if (total_ > std::numeric_limits<std::size_t>::max() / std::size_t(n_) ||
            total_ * std::size_t(n_) > (std::size_t(1) << 31))
            throw std::invalid_argument("PeriodicGrid: total point count too large");
        total_ *= std::size_t(n_);
    }
}

double PeriodicGrid::cell_volume() const {
    double v = 1.0;
    for (int a = 0; a < dim_; ++a) v *= spacing();
    return v;
}

std::size_t PeriodicGrid::mode_index(std::span<const int> k) const {
    if (int(k.size()) != dim_)
        throw std::invalid_argument("mode_index: wavevector arity mismatch");
    std::size_t flat = 0;
    for (int a = 0; a < dim_; ++a) {
        const int ka = k[a];
        if (ka < -n_ / 2 || ka >= n_ / 2)
            throw std::invalid_argument("mode_index: wavevector outside lattice");
        const int i = ka >= 0 ? ka : ka + n_;
        flat = flat * std::size_t(n_) + std::size_t(i);
    }
    return flat;
}

}  // namespace epspectra
