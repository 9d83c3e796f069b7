#ifndef EPSPECTRA_TEST_ORACLES_HPP
#define EPSPECTRA_TEST_ORACLES_HPP

// Reference computations kept independent of the operator implementations
// they are used to check.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "epspectra/field.hpp"
#include "epspectra/spectral_ops.hpp"

namespace oracle {

using epspectra::PeriodicGrid;
using epspectra::ScalarField;
using epspectra::VectorField;

// d=1 closed form of the nonlocal transport right-hand side:
//   -u u_x - (1 - d_xx)^{-1} d_x (u^2 + u_x^2 / 2)
// assembled from scalar primitives only.
inline VectorField ch_rhs_reference(const VectorField& u, double fraction) {
    const ScalarField& u0 = u[0];
    const ScalarField ud = epspectra::dealias(u0, fraction);
    const ScalarField ux = epspectra::spectral_derivative(ud, 0);
    const ScalarField uux = epspectra::dealias(epspectra::multiply(ud, ux), fraction);
    const ScalarField usq = epspectra::dealias(epspectra::multiply(ud, ud), fraction);
    const ScalarField uxsq = epspectra::dealias(epspectra::multiply(ux, ux), fraction);
    const ScalarField tail = epspectra::helmholtz_inverse(
        epspectra::spectral_derivative(usq + 0.5 * uxsq, 0));
    return VectorField({-(uux + tail)});
}

// classical RK4 written out longhand
template <typename Rhs>
std::vector<double> rk4_reference(std::vector<double> y, double dt, int steps, Rhs rhs) {
    const std::size_t n = y.size();
    for (int s = 0; s < steps; ++s) {
        const std::vector<double> k1 = rhs(y);
        std::vector<double> tmp(n);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * dt * k1[i];
        const std::vector<double> k2 = rhs(tmp);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * dt * k2[i];
        const std::vector<double> k3 = rhs(tmp);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + dt * k3[i];
        const std::vector<double> k4 = rhs(tmp);
        for (std::size_t i = 0; i < n; ++i)
            y[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    return y;
}

// profile with the same plateau/support radii as the data generators,
// evaluated by direct lattice-sum synthesis (no FFT)
struct AxisProfile {
    double period;
    std::vector<double> transform;  // index k in 0..K-1 meaning frequency k/12m

    double operator()(double x) const {
        const double fu = 2.0 * std::numbers::pi / period;
        double v = transform[0] / period;
        for (std::size_t k = 1; k < transform.size(); ++k)
            v += 2.0 * transform[k] / period * std::cos(fu * double(k) * x);
        return v;
    }
};

inline AxisProfile axis_profile_reference(double period, double plateau, double support) {
    const double fu = 2.0 * std::numbers::pi / period;
    AxisProfile prof{period, {}};
    for (int k = 0;; ++k) {
        const double xi = fu * k;
        if (xi >= support) break;
        double value;
        if (xi <= plateau) {
            value = 1.0;
        } else {
            const double hi = std::exp(-1.0 / (support - xi));
            const double lo = std::exp(-1.0 / (xi - plateau));
            value = hi / (hi + lo);
        }
        prof.transform.push_back(value);
    }
    return prof;
}

// (17/12) * || phi^2 cos(lambda x) ||_{L^p} by rectangle quadrature at a
// ladder of lambda = (17/12) 2^m, times the transverse plateau factors
// || phi ||_{L^{2p}}^{2(d-1)}; returns the value at the top of the ladder.
inline double averaging_limit_reference(double p, int d, const AxisProfile& prof,
                                        int m_top = 12, int quad_points = 1 << 20) {
    const double h = prof.period / quad_points;
    auto lp_of = [&](auto f, double q) {
        double acc = 0.0;
        for (int j = 0; j < quad_points; ++j) acc += std::pow(std::abs(f(j * h)), q);
        return std::pow(acc * h, 1.0 / q);
    };
    const double lambda = (17.0 / 12.0) * std::ldexp(1.0, m_top);
    const double osc = lp_of(
        [&](double x) {
            const double ph = prof(x);
            return ph * ph * std::cos(lambda * x);
        },
        p);
    double transverse = 1.0;
    if (d > 1) {
        const double phi_2p = lp_of([&](double x) { return prof(x); }, 2.0 * p);
        transverse = std::pow(phi_2p * phi_2p, double(d - 1));
    }
    return (17.0 / 12.0) * osc * transverse;
}

// L^p of |cos| over one period, the averaging constant c_p
inline double cos_mean_reference(double p, int quad_points = 1 << 20) {
    double acc = 0.0;
    const double h = 2.0 * std::numbers::pi / quad_points;
    for (int j = 0; j < quad_points; ++j)
        acc += std::pow(std::abs(std::cos(j * h)), p);
    return std::pow(acc / quad_points, 1.0 / p);
}

// ring field with every coefficient on the exact plateau of block j:
// radii in [4/3 * 2^j, 1.5 * 1.01 * 2^j] stay strictly inside the region
// where the block profile is exactly one and both neighbors vanish
inline ScalarField plateau_ring_field(const PeriodicGrid& g, int j, unsigned seed) {
    const double lo = (4.0 / 3.0) * std::ldexp(1.0, j);
    const double hi = 1.5 * 1.01 * std::ldexp(1.0, j);
    std::vector<std::complex<double>> coeffs(g.total_points());
    unsigned state = seed * 2654435761u + 12345u;
    auto next = [&state]() {
        state = state * 1664525u + 1013904223u;
        return double(state >> 8) / double(1u << 24) - 0.5;
    };
    const int half = g.points_per_axis() / 2;
    epspectra::for_each_mode(g, [&](std::size_t flat, std::span<const int> k,
                                    std::span<const double> xi) {
        for (int kc : k)
            if (kc == -half) return;  // no conjugate partner on the lattice
        double rho_sq = 0.0;
        for (double x : xi) rho_sq += x * x;
        const double rho = std::sqrt(rho_sq);
        if (rho < lo || rho > hi) return;
        bool lead = false;  // fill one of each conjugate pair, mirror the other
        for (std::size_t a = 0; a < k.size(); ++a) {
            if (k[a] > 0) {
                lead = true;
                break;
            }
            if (k[a] < 0) break;
        }
        if (!lead) return;
        coeffs[flat] = std::complex<double>(next(), next());
        std::array<int, PeriodicGrid::max_dim> mirror{};
        for (std::size_t a = 0; a < k.size(); ++a) mirror[a] = -k[a];
        coeffs[g.mode_index(std::span<const int>(mirror.data(), k.size()))] =
            std::conj(coeffs[flat]);
    });
    return ScalarField::from_coefficients(g, std::move(coeffs));
}

}  // namespace oracle

#endif
