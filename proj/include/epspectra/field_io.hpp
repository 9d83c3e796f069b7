#ifndef EPSPECTRA_FIELD_IO_HPP
#define EPSPECTRA_FIELD_IO_HPP

#include <string>
#include <vector>

#include "epspectra/field.hpp"

namespace epspectra {

// Binary field container, little-endian:
//   "EPSF" | u32 version | u32 dim | u32 components | u32 points_per_axis |
//   f64 period | components * points^dim f64 samples, row-major.
// Samples round-trip bit for bit; coefficients are recomputed on read.

struct FieldFile {
    PeriodicGrid grid;
    std::vector<ScalarField> components;

    bool is_velocity() const { return int(components.size()) == grid.dim(); }
    VectorField as_velocity() const;
};

void write_field(const std::string& path, const ScalarField& f);
void write_field(const std::string& path, const VectorField& u);
FieldFile read_field(const std::string& path);

}  // namespace epspectra

#endif
