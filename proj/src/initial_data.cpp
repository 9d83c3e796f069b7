#include "epspectra/initial_data.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace epspectra {

VectorField smooth_bump_velocity(const PeriodicGrid& g, double amplitude, double width) {
    const double fu = g.frequency_unit();
    const int k0 = std::max(1, int(std::lround(1.0 / fu)));
    const double base = k0 * fu;
    std::vector<ScalarField> comps;
    comps.reserve(std::size_t(g.dim()));
    for (int c = 0; c < g.dim(); ++c) {
        const double shift = 0.25 * g.period() * c / std::max(1, g.dim());
        std::vector<double> s(g.total_points());
        for_each_point(g, [&](std::size_t flat, std::span<const double> x) {
            s[flat] = amplitude * std::exp(width * (std::cos(base * (x[std::size_t(c)] - shift)) - 1.0));
        });
        comps.push_back(ScalarField::from_samples(g, std::move(s)));
    }
    return VectorField(std::move(comps));
}

ScalarField random_bandlimited_scalar(const PeriodicGrid& g, int kmax, double amplitude,
                                      double decay, std::uint64_t seed) {
    if (kmax < 1 || kmax >= g.points_per_axis() / 2)
        throw std::invalid_argument("random_bandlimited_scalar: kmax must be in [1, N/2)");
    const int d = g.dim();
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<std::complex<double>> c(g.total_points(), 0.0);
    std::array<int, PeriodicGrid::max_dim> neg{};
    for_each_mode(g, [&](std::size_t flat, std::span<const int> k, std::span<const double> xi) {
        bool zero = true, inband = true;
        for (int a = 0; a < d; ++a) {
            if (k[a] != 0) zero = false;
            if (std::abs(k[a]) > kmax) inband = false;
        }
        if (zero || !inband) return;
        for (int a = 0; a < d; ++a) neg[std::size_t(a)] = -k[a];
        const std::size_t partner = g.mode_index(std::span<const int>(neg.data(), std::size_t(d)));
        if (partner < flat) return;  // already assigned through its mirror
        double r2 = 0.0;
        for (double v : xi) r2 += v * v;
        const double mag = amplitude * std::pow(1.0 + std::sqrt(r2), -decay);
        // self-conjugate modes cannot appear: k = 0 is skipped and the
        // Nyquist line sits outside the band
        const std::complex<double> z(normal(rng), normal(rng));
        c[flat] = mag * z;
        c[partner] = std::conj(c[flat]);
    });
    return ScalarField::from_coefficients(g, std::move(c));
}

VectorField random_bandlimited_velocity(const PeriodicGrid& g, int kmax, double amplitude,
                                        double decay, std::uint64_t seed) {
    std::vector<ScalarField> comps;
    comps.reserve(std::size_t(g.dim()));
    for (int c = 0; c < g.dim(); ++c)
        comps.push_back(random_bandlimited_scalar(g, kmax, amplitude, decay,
                                                  seed + 0x9e3779b97f4a7c15ull * std::uint64_t(c + 1)));
    return VectorField(std::move(comps));
}

}  // namespace epspectra
