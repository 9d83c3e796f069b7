#include "epspectra/spectral_ops.hpp"

#include <cmath>
#include <stdexcept>

namespace epspectra {

ScalarField to_spectral(const ScalarField& f) {
    return ScalarField::from_samples(f.grid(), f.samples());
}

ScalarField to_physical(const ScalarField& f) {
    return ScalarField::from_coefficients(f.grid(), f.coefficients());
}

ScalarField spectral_derivative(const ScalarField& f, int axis) {
    const int d = f.grid().dim();
    if (axis < 0 || axis >= d)
        throw std::invalid_argument("spectral_derivative: axis out of range");
    const int nyquist = -f.grid().points_per_axis() / 2;
    return apply_symbol(f, [axis, nyquist](std::span<const int> k,
                                           std::span<const double> xi) {
        if (k[axis] == nyquist) return std::complex<double>(0.0, 0.0);
        return std::complex<double>(0.0, xi[axis]);
    });
}

namespace {

double xi_norm_sq(std::span<const double> xi) {
    double s = 0.0;
    for (double v : xi) s += v * v;
    return s;
}

template <typename F>
VectorField map_components(const VectorField& u, F&& f) {
    std::vector<ScalarField> comps;
    comps.reserve(std::size_t(u.size()));
    for (int i = 0; i < u.size(); ++i) comps.push_back(f(u[i]));
    return VectorField(std::move(comps));
}

}  // namespace

ScalarField helmholtz_inverse(const ScalarField& f) {
    return apply_symbol(f, [](std::span<const int>, std::span<const double> xi) {
        return std::complex<double>(1.0 / (1.0 + xi_norm_sq(xi)), 0.0);
    });
}

VectorField helmholtz_inverse(const VectorField& u) {
    return map_components(u, [](const ScalarField& f) { return helmholtz_inverse(f); });
}

ScalarField helmholtz_forward(const ScalarField& f) {
    return apply_symbol(f, [](std::span<const int>, std::span<const double> xi) {
        return std::complex<double>(1.0 + xi_norm_sq(xi), 0.0);
    });
}

VectorField helmholtz_forward(const VectorField& u) {
    return map_components(u, [](const ScalarField& f) { return helmholtz_forward(f); });
}

ScalarField laplacian(const ScalarField& f) {
    return apply_symbol(f, [](std::span<const int>, std::span<const double> xi) {
        return std::complex<double>(-xi_norm_sq(xi), 0.0);
    });
}

VectorField gradient(const ScalarField& f) {
    std::vector<ScalarField> comps;
    comps.reserve(std::size_t(f.grid().dim()));
    for (int a = 0; a < f.grid().dim(); ++a) comps.push_back(spectral_derivative(f, a));
    return VectorField(std::move(comps));
}

ScalarField divergence(const VectorField& u) {
    ScalarField acc = spectral_derivative(u[0], 0);
    for (int a = 1; a < u.size(); ++a) acc = acc + spectral_derivative(u[a], a);
    return acc;
}

std::vector<std::vector<ScalarField>> jacobian(const VectorField& u) {
    const int d = u.grid().dim();
    std::vector<std::vector<ScalarField>> rows;
    rows.reserve(std::size_t(d));
    for (int i = 0; i < d; ++i) {
        std::vector<ScalarField> row;
        row.reserve(std::size_t(d));
        for (int j = 0; j < d; ++j) row.push_back(spectral_derivative(u[i], j));
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

void check_lp_exponent(double p) {
    if (!(p > 1.0) || !std::isfinite(p))
        throw std::invalid_argument("lp_norm: exponent must satisfy 1 < p < inf");
}

}  // namespace

double lp_norm(const ScalarField& f, double p) {
    check_lp_exponent(p);
    const double vol = f.grid().cell_volume();
    double acc = 0.0;
    for (double s : f.samples()) acc += std::pow(std::abs(s), p);
    return std::pow(vol * acc, 1.0 / p);
}

double lp_norm(const VectorField& u, double p) {
    check_lp_exponent(p);
    const double vol = u.grid().cell_volume();
    const std::size_t total = u.grid().total_points();
    double acc = 0.0;
    for (std::size_t i = 0; i < total; ++i) {
        double m = 0.0;
        for (int c = 0; c < u.size(); ++c) {
            const double v = u[c].samples()[i];
            m += v * v;
        }
        acc += std::pow(std::sqrt(m), p);
    }
    return std::pow(vol * acc, 1.0 / p);
}

double linf_norm(const ScalarField& f) {
    double m = 0.0;
    for (double s : f.samples()) m = std::max(m, std::abs(s));
    return m;
}

double linf_norm(const VectorField& u) {
    const std::size_t total = u.grid().total_points();
    double m = 0.0;
    for (std::size_t i = 0; i < total; ++i) {
        double q = 0.0;
        for (int c = 0; c < u.size(); ++c) {
            const double v = u[c].samples()[i];
            q += v * v;
        }
        m = std::max(m, q);
    }
    return std::sqrt(m);
}

double l2_from_coefficients(const ScalarField& f) {
    double acc = 0.0;
    for (const std::complex<double>& c : f.coefficients()) acc += std::norm(c);
    double vol = 1.0;
    for (int a = 0; a < f.grid().dim(); ++a) vol *= f.grid().period();
    return std::sqrt(vol * acc);
}

ScalarField dealias(const ScalarField& f, double fraction) {
    if (!(fraction > 0.0) || fraction > 1.0)
        throw std::invalid_argument("dealias: fraction must lie in (0, 1]");
    const double cut = fraction * 0.5 * f.grid().points_per_axis();
    bool touched = false;
    for_each_mode(f.grid(), [&](std::size_t flat, std::span<const int> k,
                                std::span<const double>) {
        for (int a = 0; a < int(k.size()); ++a) {
            if (std::abs(k[a]) > cut) {
                if (f.coefficients()[flat] != std::complex<double>(0.0, 0.0)) touched = true;
                return;
            }
        }
    });
    if (!touched) return f;
    std::vector<std::complex<double>> c = f.coefficients();
    for_each_mode(f.grid(), [&](std::size_t flat, std::span<const int> k,
                                std::span<const double>) {
        for (int a = 0; a < int(k.size()); ++a) {
            if (std::abs(k[a]) > cut) {
                c[flat] = 0.0;
                return;
            }
        }
    });
    return ScalarField::from_coefficients(f.grid(), std::move(c));
}

VectorField dealias(const VectorField& u, double fraction) {
    return map_components(u, [fraction](const ScalarField& f) { return dealias(f, fraction); });
}

ScalarField multiply(const ScalarField& a, const ScalarField& b) {
    if (a.grid() != b.grid())
        throw std::invalid_argument("multiply: grids differ");
    const std::size_t total = a.grid().total_points();
    std::vector<double> s(total);
    for (std::size_t i = 0; i < total; ++i) s[i] = a.samples()[i] * b.samples()[i];
    return ScalarField::from_samples(a.grid(), std::move(s));
}

ScalarField dealiased_product(const ScalarField& a, const ScalarField& b, double fraction) {
    return dealias(multiply(dealias(a, fraction), dealias(b, fraction)), fraction);
}

}  // namespace epspectra
