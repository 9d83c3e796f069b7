#ifndef EPSPECTRA_SPECTRAL_OPS_HPP
#define EPSPECTRA_SPECTRAL_OPS_HPP

#include <complex>
#include <functional>
#include <vector>

#include "epspectra/field.hpp"

namespace epspectra {

// Refresh one representation from the other. to_spectral recomputes the
// coefficients from the samples (samples unchanged); to_physical goes the
// other way (coefficients unchanged).
ScalarField to_spectral(const ScalarField& f);
ScalarField to_physical(const ScalarField& f);

// c_k -> symbol(k, xi) * c_k followed by synthesis of the samples.
template <typename Symbol>
ScalarField apply_symbol(const ScalarField& f, Symbol&& symbol) {
    std::vector<std::complex<double>> c = f.coefficients();
    for_each_mode(f.grid(), [&](std::size_t flat, std::span<const int> k,
                                std::span<const double> xi) {
        c[flat] *= symbol(k, xi);
    });
    return ScalarField::from_coefficients(f.grid(), std::move(c));
}

// d/dx_axis as the multiplier i*xi_axis; the Nyquist mode has no signed
// frequency and is zeroed.
ScalarField spectral_derivative(const ScalarField& f, int axis);

// (1 - Laplace)^{-1}: divide each coefficient by 1 + |xi|^2
ScalarField helmholtz_inverse(const ScalarField& f);
VectorField helmholtz_inverse(const VectorField& f);
// (1 - Laplace): multiply by 1 + |xi|^2
ScalarField helmholtz_forward(const ScalarField& f);
VectorField helmholtz_forward(const VectorField& f);
ScalarField laplacian(const ScalarField& f);

VectorField gradient(const ScalarField& f);
ScalarField divergence(const VectorField& u);
// J[i][j] = d u_i / d x_j
std::vector<std::vector<ScalarField>> jacobian(const VectorField& u);

// Rectangle-rule L^p norm over the torus; requires p > 1. Vector fields are
// measured through their pointwise Euclidean magnitude.
double lp_norm(const ScalarField& f, double p);
double lp_norm(const VectorField& u, double p);
double linf_norm(const ScalarField& f);
double linf_norm(const VectorField& u);
// L^2 norm evaluated on the coefficient side (Plancherel route)
double l2_from_coefficients(const ScalarField& f);

// Zero every coefficient with |k| > fraction * N/2 on any axis. fraction in
// (0, 1]; inputs already inside the band are returned unchanged.
ScalarField dealias(const ScalarField& f, double fraction);
VectorField dealias(const VectorField& u, double fraction);

// Pointwise products. dealiased_product truncates both factors to the band,
// multiplies, and truncates the result again (2/3-rule for fraction = 2/3).
ScalarField multiply(const ScalarField& a, const ScalarField& b);
ScalarField dealiased_product(const ScalarField& a, const ScalarField& b, double fraction);

}  // namespace epspectra

#endif
