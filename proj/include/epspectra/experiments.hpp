#ifndef EPSPECTRA_EXPERIMENTS_HPP
#define EPSPECTRA_EXPERIMENTS_HPP

#include <string>
#include <utility>
#include <vector>

#include "epspectra/evolution.hpp"
#include "epspectra/field.hpp"
#include "epspectra/littlewood_paley.hpp"

namespace epspectra {

// One-axis frequency profile used by the oscillatory data families: exactly 1
// on the plateau |xi| <= 4^{-d}, exactly 0 beyond |xi| >= 2^{-d}, smooth and
// monotone in between. The d-dependent radii keep d-fold products of the
// profile inside a ball of radius 1/2.
class BumpProfile {
  public:
    // throws when the frequency lattice spacing does not resolve the plateau
    static BumpProfile make(const PeriodicGrid& g, int d);

    const PeriodicGrid& grid() const { return grid_; }
    int d() const { return d_; }
    double plateau_radius() const { return cut_.inner; }
    double support_radius() const { return cut_.outer; }

    double value(double xi) const { return cut_(std::abs(xi)); }
    // profile at the one-axis lattice frequencies, FFT index order
    const std::vector<double>& transform_values() const { return values_; }
    // physical-space profile on the one-dimensional companion grid, built
    // from coefficients value(xi_k) / period
    ScalarField axis_profile() const;

  private:
    BumpProfile(const PeriodicGrid& g, int d, SmoothCutoff cut, std::vector<double> v)
        : grid_(g), d_(d), cut_(cut), values_(std::move(v)) {}

    PeriodicGrid grid_;
    int d_;
    SmoothCutoff cut_;
    std::vector<double> values_;
};

// High-frequency family: first velocity component
//   2^{-ns} phi(x_1) sin(lambda_n x_1) phi(x_2) ... phi(x_d),
// lambda_n = (17/12) 2^n, built directly on the coefficient side so the
// frequency support is exact. Requires lambda_n on the lattice and a
// resolution of at least 4 * 2^n per axis; other components are zero.
VectorField make_fn(int n, const PeriodicGrid& g, double s, const BumpProfile& bump);
// Low-frequency companion 2^{-n} phi(x_1) ... phi(x_d), same layout.
VectorField make_gn(int n, const PeriodicGrid& g, const BumpProfile& bump);

// Exact coefficient-side convolution of two sparsely supported fields. Every
// nonzero product mode must stay strictly inside the representable band;
// throws otherwise. No transform round-off is introduced.
ScalarField sparse_product(const ScalarField& a, const ScalarField& b);

struct AuxTable {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

// Uniform container for experiment output: a main table destined for CSV,
// named scalars, pass/fail verdicts, and auxiliary tables that only appear in
// the JSON form. Parameters echo the full configuration that produced the
// numbers.
struct ExperimentReport {
    std::string name;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::pair<std::string, double>> scalars;
    std::vector<std::pair<std::string, bool>> verdicts;
    std::vector<AuxTable> aux;

    std::string csv() const;
    std::string json() const;

    double scalar(const std::string& key) const;
    bool verdict(const std::string& key) const;
    bool all_verdicts_hold() const;
};

// Short-time expansion orders of the flow map: for each t in t_list compares
// the solved state against u0 - t * u0_functional(u0), reporting
//   e_quadratic(t) = || S_t(u0) - u0 + t U0 ||   (expected order t^2)
//   e_linear(t)    = || S_t(u0) - u0 ||          (expected order t)
// in the space sp, with least-squares log-log slopes as scalars.
ExperimentReport prop31_check(const VectorField& u0, const std::vector<double>& t_list,
                              const SpaceParams& sp, const DyadicPartition& part,
                              const SolverConfig& cfg);

// Separation experiment on the pair u0 = (f_n, 0, ...), v0 = (f_n + g_n, 0, ...):
// the initial distances shrink like 2^{-n} while the evolved distance at the
// probe time stays bounded below by a positive multiple of t_probe.
// t_probe <= 0 selects the probe automatically: distances are sampled at the
// dyadic times t_final * 2^{-k}, and the probe is the largest sampled t whose
// combined expansion residuals stay under a quarter of t times the norm of
// the driving product g_n d_1 f_n, minimized over n. Rows with a tripped
// blow-up guard carry NaN distances and fail the completion verdict.
ExperimentReport nonuniform_experiment(const PeriodicGrid& g, int n_lo, int n_hi,
                                       double s, double p, double r, double t_probe,
                                       const SolverConfig& cfg);

// The averaged lower bound driving the separation: verifies that
// g_n d_1 f_n is exactly supported in the widened annulus
// |xi| in [lambda_n - 1, lambda_n + 1], that its weighted norm
// 2^{ns} ||.||_{L^p} agrees with the general block-stack path, and that the
// sequence of weighted norms settles (<= 5% relative step at the top).
// Cross products g_n d_1 g_n and f_n d_1 g_n decay at least like 2^{-n/2}.
ExperimentReport rl_lower_bound(int n_lo, int n_hi, double s, double p,
                                const BumpProfile& bump);

// Smoothing families: for each cutoff index N, evolve the truncated data
// low_pass(u0, N) alongside u0 and report
//   || S_t(S_N u0) - S_t(u0) || / || S_N u0 - u0 ||
// at the final time. The ratio should stay within a constant of its value at
// the smallest N while numerator and denominator both shrink.
ExperimentReport continuous_dependence_experiment(const VectorField& u0,
                                                  const std::vector<int>& cutoffs,
                                                  const SpaceParams& sp,
                                                  const DyadicPartition& part,
                                                  const SolverConfig& cfg);

// Frozen-coefficient iteration ladder: the end-time gaps b_n = ||u^{n+1} - u^n||
// in B^{s-1}_{p,inf} per iterate, their log2 slope, and the gap between the
// next-to-last iterate and the full solver.
ExperimentReport picard_experiment(const VectorField& u0, int n_iters,
                                   const SolverConfig& cfg, const DyadicPartition& part);

}  // namespace epspectra

#endif
