#ifndef EPSPECTRA_FIELD_HPP
#define EPSPECTRA_FIELD_HPP

#include <complex>
#include <vector>

#include "epspectra/grid.hpp"

namespace epspectra {

// Real scalar field on a PeriodicGrid carrying both representations at once:
// samples on the physical lattice and Fourier coefficients c_k with
//   f(x) = sum_k c_k exp(i xi_k . x).
// Construction from either side fills in the other, so the two stay
// consistent up to transform round-off. Instances are immutable values.
class ScalarField {
  public:
    static ScalarField zeros(const PeriodicGrid& g);
    static ScalarField from_samples(const PeriodicGrid& g, std::vector<double> samples);
    static ScalarField from_coefficients(const PeriodicGrid& g,
                                         std::vector<std::complex<double>> coeffs);
    // Both representations supplied by a caller that kept them consistent
    // (linear operations act on samples and coefficients in lockstep).
    static ScalarField from_parts(const PeriodicGrid& g, std::vector<double> samples,
                                  std::vector<std::complex<double>> coeffs,
                                  double imag_residue);

    const PeriodicGrid& grid() const { return grid_; }
    const std::vector<double>& samples() const { return samples_; }
    const std::vector<std::complex<double>>& coefficients() const { return coeffs_; }

    // largest |Im| seen when the samples were synthesized from coefficients;
    // 0 for fields built from samples
    double imag_residue() const { return imag_residue_; }

  private:
    ScalarField(const PeriodicGrid& g, std::vector<double> s,
                std::vector<std::complex<double>> c, double res)
        : grid_(g), samples_(std::move(s)), coeffs_(std::move(c)), imag_residue_(res) {}

    PeriodicGrid grid_;
    std::vector<double> samples_;
    std::vector<std::complex<double>> coeffs_;
    double imag_residue_;
};

ScalarField operator+(const ScalarField& a, const ScalarField& b);
ScalarField operator-(const ScalarField& a, const ScalarField& b);
ScalarField operator*(double c, const ScalarField& f);
ScalarField operator-(const ScalarField& f);

// Velocity-type field: one scalar component per grid dimension.
class VectorField {
  public:
    explicit VectorField(std::vector<ScalarField> components);
    static VectorField zeros(const PeriodicGrid& g);

    const PeriodicGrid& grid() const { return components_.front().grid(); }
    int size() const { return int(components_.size()); }
    const ScalarField& operator[](int i) const { return components_[std::size_t(i)]; }
    const std::vector<ScalarField>& components() const { return components_; }

  private:
    std::vector<ScalarField> components_;
};

VectorField operator+(const VectorField& a, const VectorField& b);
VectorField operator-(const VectorField& a, const VectorField& b);
VectorField operator*(double c, const VectorField& f);
VectorField operator-(const VectorField& f);

}  // namespace epspectra

#endif
