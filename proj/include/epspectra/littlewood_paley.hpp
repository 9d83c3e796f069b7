#ifndef EPSPECTRA_LITTLEWOOD_PALEY_HPP
#define EPSPECTRA_LITTLEWOOD_PALEY_HPP

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "epspectra/field.hpp"

namespace epspectra {

// Radial profile that is exactly 1 for rho <= inner, exactly 0 for
// rho >= outer, and glued smoothly in between with the exp(-1/t) blend
//   h(outer - rho) / (h(outer - rho) + h(rho - inner)).
struct SmoothCutoff {
    double inner;
    double outer;

    double operator()(double rho) const {
        if (rho <= inner) return 1.0;
        if (rho >= outer) return 0.0;
        const double hi = blend(outer - rho);
        const double lo = blend(rho - inner);
        return hi / (hi + lo);
    }

    static double blend(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }
};

enum class SpaceKind { Besov, TriebelLizorkin };

// Smoothness/integrability triple (s, p, index). index is the outer summation
// exponent q of a Besov space or the inner stacking exponent r of a
// Triebel-Lizorkin space; infinity is allowed for Besov only.
struct SpaceParams {
    double s;
    double p;
    double index;
    SpaceKind kind;

    SpaceParams(double s_, double p_, double index_, SpaceKind kind_);

    static SpaceParams besov(double s_, double p_, double q_);
    static SpaceParams triebel_lizorkin(double s_, double p_, double r_);

    bool index_is_finite() const { return std::isfinite(index); }
    // sufficient regularity for the transport estimates to close
    bool in_wellposed_regime(int dim) const {
        return s > std::max(1.5, 1.0 + double(dim) / p);
    }
};

// Dyadic decomposition of the grid's frequency lattice. chi is supported in
// {|xi| <= 4/3} and equals 1 below ~3/4; phi(xi) = chi(xi/2) - chi(xi) lives
// on the annulus {~3/4 <= |xi| <= 8/3}, and phi(2^-j .) for j = 0..j_max
// together with chi tile every resolved frequency:
//   chi(xi) + sum_j phi(2^-j xi) = 1.
// Blocks whose support starts above the largest lattice frequency are
// dropped; j_max is the last surviving block.
class DyadicPartition {
  public:
    static DyadicPartition build(const PeriodicGrid& g);

    const PeriodicGrid& grid() const { return grid_; }
    int j_max() const { return j_max_; }
    const SmoothCutoff& chi() const { return chi_; }

    // |xi| and chi(|xi|) per lattice mode, flat row-major order
    const std::vector<double>& radius_table() const { return rho_; }
    const std::vector<double>& chi_table() const { return chi_values_; }

    // phi(2^-j |xi|) at one mode / materialized for the whole lattice
    double phi_at(int j, double rho) const {
        return chi_(std::ldexp(rho, -(j + 1))) - chi_(std::ldexp(rho, -j));
    }
    std::vector<double> phi_table(int j) const;

  private:
    DyadicPartition(const PeriodicGrid& g, SmoothCutoff chi, int j_max,
                    std::vector<double> rho, std::vector<double> chi_values)
        : grid_(g), chi_(chi), j_max_(j_max), rho_(std::move(rho)),
          chi_values_(std::move(chi_values)) {}

    PeriodicGrid grid_;
    SmoothCutoff chi_;
    int j_max_;
    std::vector<double> rho_;
    std::vector<double> chi_values_;
};

// Frequency-localization pieces Delta_j f: zero for j <= -2, chi(D) f for
// j = -1, phi(2^-j D) f for 0 <= j <= j_max, zero beyond j_max (no lattice
// support there).
ScalarField dyadic_block(const ScalarField& f, int j, const DyadicPartition& part);
VectorField dyadic_block(const VectorField& u, int j, const DyadicPartition& part);

// Low-pass S_N = sum_{q <= N-1} Delta_q, realized as the telescoped partial
// sum of the same per-mode block profiles. N <= -1 gives the zero field;
// N > j_max returns the input unchanged.
ScalarField low_pass(const ScalarField& f, int cutoff_index, const DyadicPartition& part);
VectorField low_pass(const VectorField& u, int cutoff_index, const DyadicPartition& part);

// Besov norm: || ( 2^{js} ||Delta_j f||_{L^p} )_j ||_{l^index}
double besov_norm(const ScalarField& f, const SpaceParams& sp, const DyadicPartition& part);
double besov_norm(const VectorField& u, const SpaceParams& sp, const DyadicPartition& part);

// Triebel-Lizorkin seminorm || ( sum_j 2^{jsr} |Delta_j f|^r )^{1/r} ||_{L^p}
// and the full norm ||f||_{L^p} + seminorm.
double tl_seminorm(const ScalarField& f, const SpaceParams& sp, const DyadicPartition& part);
double tl_seminorm(const VectorField& u, const SpaceParams& sp, const DyadicPartition& part);
double tl_norm(const ScalarField& f, const SpaceParams& sp, const DyadicPartition& part);
double tl_norm(const VectorField& u, const SpaceParams& sp, const DyadicPartition& part);

struct EmbeddingReport {
    double besov_value;  // B^s_{p,inf}
    double tl_value;     // F^s_{p,r} full norm
    bool holds;
};

// Discrete form of B^s_{p,inf} <= F^s_{p,r}: the sup over weighted block
// norms against the L^p of the stacked blocks plus the L^p term.
EmbeddingReport embedding_check(const ScalarField& f, double s, double p, double r,
                                const DyadicPartition& part);

struct BlockNormRow {
    int j;
    double block_lp;   // ||Delta_j f||_{L^p}
    double weighted;   // 2^{js} ||Delta_j f||_{L^p}
};

std::vector<BlockNormRow> block_spectrum(const ScalarField& f, const SpaceParams& sp,
                                         const DyadicPartition& part);
std::vector<BlockNormRow> block_spectrum(const VectorField& u, const SpaceParams& sp,
                                         const DyadicPartition& part);
std::string block_spectrum_csv(const std::vector<BlockNormRow>& rows);

}  // namespace epspectra

#endif
