#ifndef EPSPECTRA_INITIAL_DATA_HPP
#define EPSPECTRA_INITIAL_DATA_HPP

#include <cstdint>

#include "epspectra/field.hpp"

namespace epspectra {

// Smooth periodic ridge per component:
//   u_c(x) = amplitude * exp(width * (cos(k0 * fu * (x_c' - shift_c)) - 1))
// with k0 chosen so the characteristic frequency is ~1 regardless of period.
VectorField smooth_bump_velocity(const PeriodicGrid& g, double amplitude, double width);

// Zero-mean random field with coefficients supported on 0 < |k|_inf <= kmax,
// drawn from a seeded generator with |c(xi)| ~ (1 + |xi|)^{-decay}. Hermitian
// symmetry is enforced so samples are real. kmax must stay below N/2.
ScalarField random_bandlimited_scalar(const PeriodicGrid& g, int kmax, double amplitude,
                                      double decay, std::uint64_t seed);
VectorField random_bandlimited_velocity(const PeriodicGrid& g, int kmax, double amplitude,
                                        double decay, std::uint64_t seed);

}  // namespace epspectra

#endif
