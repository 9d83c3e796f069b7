#ifndef EPSPECTRA_TRANSFORM_HPP
#define EPSPECTRA_TRANSFORM_HPP

#include <complex>

#include "epspectra/grid.hpp"

namespace epspectra::detail {

// Unnormalized c2c DFT over the grid's lattice; sign -1 is the analysis
// direction, +1 the synthesis direction. in and out must not overlap.
// Plans are cached per (dim, N, sign); plan creation is serialized, execution
// is reentrant.
void dft(const PeriodicGrid& g, const std::complex<double>* in,
         std::complex<double>* out, int sign);

}  // namespace epspectra::detail

#endif
