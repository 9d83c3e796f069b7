#include "epspectra/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "transform.hpp"

namespace epspectra {

namespace {

void check_size(const PeriodicGrid& g, std::size_t got, const char* what) {
    if (got != g.total_points())
        throw std::invalid_argument(std::string(what) + ": array size does not match grid");
}

}  // namespace

ScalarField ScalarField::zeros(const PeriodicGrid& g) {
    return ScalarField(g, std::vector<double>(g.total_points(), 0.0),
                       std::vector<std::complex<double>>(g.total_points(), 0.0), 0.0);
}

ScalarField ScalarField::from_samples(const PeriodicGrid& g, std::vector<double> samples) {
    check_size(g, samples.size(), "ScalarField::from_samples");
    const std::size_t total = g.total_points();
    std::vector<std::complex<double>> buf(total), coeffs(total);
    for (std::size_t i = 0; i < total; ++i) buf[i] = samples[i];
    detail::dft(g, buf.data(), coeffs.data(), -1);
    const double inv = 1.0 / double(total);
    for (std::size_t i = 0; i < total; ++i) coeffs[i] *= inv;
    return ScalarField(g, std::move(samples), std::move(coeffs), 0.0);
}

ScalarField ScalarField::from_coefficients(const PeriodicGrid& g,
                                           std::vector<std::complex<double>> coeffs) {
    check_size(g, coeffs.size(), "ScalarField::from_coefficients");
    const std::size_t total = g.total_points();
    std::vector<std::complex<double>> buf(total);
    detail::dft(g, coeffs.data(), buf.data(), +1);
    std::vector<double> samples(total);
    double residue = 0.0;
    for (std::size_t i = 0; i < total; ++i) {
        samples[i] = buf[i].real();
        residue = std::max(residue, std::abs(buf[i].imag()));
    }
    return ScalarField(g, std::move(samples), std::move(coeffs), residue);
}

ScalarField ScalarField::from_parts(const PeriodicGrid& g, std::vector<double> samples,
                                    std::vector<std::complex<double>> coeffs,
                                    double imag_residue) {
    check_size(g, samples.size(), "ScalarField::from_parts");
    check_size(g, coeffs.size(), "ScalarField::from_parts");
    return ScalarField(g, std::move(samples), std::move(coeffs), imag_residue);
}

namespace {

template <typename FS, typename FC>
ScalarField zip_fields(const ScalarField& a, const ScalarField& b, FS&& fs, FC&& fc) {
    if (a.grid() != b.grid())
        throw std::invalid_argument("field arithmetic: grids differ");
    const std::size_t total = a.grid().total_points();
    std::vector<double> s(total);
    std::vector<std::complex<double>> c(total);
    for (std::size_t i = 0; i < total; ++i) s[i] = fs(a.samples()[i], b.samples()[i]);
    for (std::size_t i = 0; i < total; ++i) c[i] = fc(a.coefficients()[i], b.coefficients()[i]);
    return ScalarField::from_parts(a.grid(), std::move(s), std::move(c),
                                   std::max(a.imag_residue(), b.imag_residue()));
}

}  // namespace

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
    return zip_fields(a, b, [](double x, double y) { return x + y; },
                      [](std::complex<double> x, std::complex<double> y) { return x + y; });
}

ScalarField operator-(const ScalarField& a, const ScalarField& b) {
    return zip_fields(a, b, [](double x, double y) { return x - y; },
                      [](std::complex<double> x, std::complex<double> y) { return x - y; });
}

ScalarField operator*(double c, const ScalarField& f) {
    const std::size_t total = f.grid().total_points();
    std::vector<double> s(total);
    std::vector<std::complex<double>> co(total);
    for (std::size_t i = 0; i < total; ++i) s[i] = c * f.samples()[i];
    for (std::size_t i = 0; i < total; ++i) co[i] = c * f.coefficients()[i];
    return ScalarField::from_parts(f.grid(), std::move(s), std::move(co), f.imag_residue());
}

ScalarField operator-(const ScalarField& f) { return -1.0 * f; }

VectorField::VectorField(std::vector<ScalarField> components)
    : components_(std::move(components)) {
    if (components_.empty())
        throw std::invalid_argument("VectorField: no components");
    const PeriodicGrid& g = components_.front().grid();
    if (int(components_.size()) != g.dim())
        throw std::invalid_argument("VectorField: component count must equal grid dimension");
    for (const ScalarField& f : components_)
        if (f.grid() != g)
            throw std::invalid_argument("VectorField: components on different grids");
}

VectorField VectorField::zeros(const PeriodicGrid& g) {
    std::vector<ScalarField> comps;
    comps.reserve(std::size_t(g.dim()));
    for (int i = 0; i < g.dim(); ++i) comps.push_back(ScalarField::zeros(g));
    return VectorField(std::move(comps));
}

namespace {

template <typename F>
VectorField zip_vector(const VectorField& a, const VectorField& b, F&& f) {
    if (a.size() != b.size())
        throw std::invalid_argument("vector field arithmetic: component counts differ");
    std::vector<ScalarField> comps;
    comps.reserve(std::size_t(a.size()));
    for (int i = 0; i < a.size(); ++i) comps.push_back(f(a[i], b[i]));
    return VectorField(std::move(comps));
}

}  // namespace

VectorField operator+(const VectorField& a, const VectorField& b) {
    return zip_vector(a, b, [](const ScalarField& x, const ScalarField& y) { return x + y; });
}

VectorField operator-(const VectorField& a, const VectorField& b) {
    return zip_vector(a, b, [](const ScalarField& x, const ScalarField& y) { return x - y; });
}

VectorField operator*(double c, const VectorField& f) {
    std::vector<ScalarField> comps;
    comps.reserve(std::size_t(f.size()));
    for (int i = 0; i < f.size(); ++i) comps.push_back(c * f[i]);
    return VectorField(std::move(comps));
}

VectorField operator-(const VectorField& f) { return -1.0 * f; }

}  // namespace epspectra
