#ifndef EPSPECTRA_GRID_HPP
#define EPSPECTRA_GRID_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>

namespace epspectra {

// Uniform d-dimensional torus [0,L)^d sampled with an even, power-of-two
// number of points per axis. Representable frequencies are xi = k*(2*pi/L)
// for integer k with -N/2 <= k < N/2 (the Nyquist mode sits at k = -N/2).
//
// The default period L = 24*pi makes the frequency lattice spacing 1/12, so
// that frequencies of the form (17/12)*2^n fall exactly on the lattice.
class PeriodicGrid {
  public:
    static constexpr int max_dim = 4;
    static constexpr double default_period = 24.0 * std::numbers::pi;

    PeriodicGrid(int dim, int points_per_axis, double period = default_period);

    int dim() const { return dim_; }
    int points_per_axis() const { return n_; }
    double period() const { return period_; }
    double frequency_unit() const { return 2.0 * std::numbers::pi / period_; }
    double spacing() const { return period_ / n_; }
    double cell_volume() const;
    std::size_t total_points() const { return total_; }

    // largest |xi| along a single axis (the Nyquist frequency)
    double max_frequency() const { return 0.5 * n_ * frequency_unit(); }
    // largest |xi| over the whole lattice (corner mode)
    double max_frequency_corner() const {
        return max_frequency() * std::sqrt(double(dim_));
    }

    // flat row-major index of the mode with integer wavevector k,
    // each k[a] in [-N/2, N/2)
    std::size_t mode_index(std::span<const int> k) const;

    bool operator==(const PeriodicGrid& o) const {
        return dim_ == o.dim_ && n_ == o.n_ && period_ == o.period_;
    }
    bool operator!=(const PeriodicGrid& o) const { return !(*this == o); }

  private:
    int dim_;
    int n_;
    double period_;
    std::size_t total_;
};

// Row-major odometer over all lattice modes. Calls f(flat, k, xi) where k is
// the integer wavevector (FFT index i maps to k = i for i < N/2, i - N
// otherwise) and xi[a] = k[a] * frequency_unit.
template <typename F>
void for_each_mode(const PeriodicGrid& g, F&& f) {
    const int d = g.dim();
    const int n = g.points_per_axis();
    const int half = n / 2;
    const double fu = g.frequency_unit();
    std::array<int, PeriodicGrid::max_dim> idx{};
    std::array<int, PeriodicGrid::max_dim> k{};
    std::array<double, PeriodicGrid::max_dim> xi{};
    const std::span<const int> kview(k.data(), std::size_t(d));
    const std::span<const double> xiview(xi.data(), std::size_t(d));
    const std::size_t total = g.total_points();
    for (std::size_t flat = 0; flat < total; ++flat) {
        f(flat, kview, xiview);
        for (int a = d - 1; a >= 0; --a) {
            ++idx[a];
            if (idx[a] == n) {
                idx[a] = 0;
                k[a] = 0;
                xi[a] = 0.0;
            } else {
                k[a] = idx[a] < half ? idx[a] : idx[a] - n;
                xi[a] = fu * k[a];
                break;
            }
        }
    }
}

// Same odometer over physical grid points; f(flat, x) with x[a] = i_a * h.
template <typename F>
void for_each_point(const PeriodicGrid& g, F&& f) {
    const int d = g.dim();
    const int n = g.points_per_axis();
    const double h = g.spacing();
    std::array<int, PeriodicGrid::max_dim> idx{};
    std::array<double, PeriodicGrid::max_dim> x{};
    const std::span<const double> xview(x.data(), std::size_t(d));
    const std::size_t total = g.total_points();
    for (std::size_t flat = 0; flat < total; ++flat) {
        f(flat, xview);
        for (int a = d - 1; a >= 0; --a) {
            ++idx[a];
            if (idx[a] == n) {
                idx[a] = 0;
                x[a] = 0.0;
            } else {
                x[a] = h * idx[a];
                break;
            }
        }
    }
}

}  // namespace epspectra

#endif
