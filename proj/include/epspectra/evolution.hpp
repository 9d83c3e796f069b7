#ifndef EPSPECTRA_EVOLUTION_HPP
#define EPSPECTRA_EVOLUTION_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "epspectra/ep_dynamics.hpp"
#include "epspectra/field.hpp"
#include "epspectra/littlewood_paley.hpp"

namespace epspectra {

struct SolverConfig {
    double dt = 1e-2;
    double t_final = 1.0;
    // absolute guard on ||grad u||_inf; <= 0 selects 10x its initial value
    double blowup_threshold = 0.0;
    double dealias_fraction = default_dealias_fraction;
    double cfl_safety = 0.8;
    // diagnostic space: F^s_{p,r} plus the lowered companion B^{s-1}_{p,inf}
    double s = 2.0;
    double p = 2.0;
    double r = 2.0;
    int diag_stride = 1;            // record norms every this many steps
    std::vector<double> snapshot_times;  // states to keep besides t=0, t_final
};

struct DiagnosticsRow {
    double t;
    double f_norm;      // F^s_{p,r}
    double besov_low;   // B^{s-1}_{p,inf}
    double grad_linf;
    double energy;      // int |u|^2 + |grad u|^2
};

struct Trajectory {
    std::vector<double> times;        // snapshot times, strictly increasing
    std::vector<VectorField> states;  // states at those times
    std::vector<DiagnosticsRow> diagnostics;

    const VectorField& state_at(double t) const;
    const VectorField& final_state() const { return states.back(); }
    double end_time() const { return times.back(); }
};

struct BlowupDetected : std::runtime_error {
    BlowupDetected(double t, double norm)
        : std::runtime_error("gradient guard tripped at t = " + std::to_string(t)),
          time(t), gradient_norm(norm) {}
    double time;
    double gradient_norm;
};

struct CflViolation : std::runtime_error {
    CflViolation(double t, double dt_suggested)
        : std::runtime_error("advective CFL bound exceeded at t = " + std::to_string(t)),
          time(t), suggested_dt(dt_suggested) {}
    double time;
    double suggested_dt;
};

struct BlowupInfo {
    double time;
    double gradient_norm;
};

// One classical RK4 step of du/dt = ep_rhs(u). Refuses the step when
// dt * (max resolved frequency) * ||u||_inf exceeds cfl_safety, suggesting
// half the step size.
VectorField rk4_step(const VectorField& u, double dt, const SolverConfig& cfg);

// Fixed-step integration up to t_final with the gradient guard armed.
// Throws BlowupDetected when the guard trips; try_solve returns the partial
// trajectory together with the guard data instead.
Trajectory solve(const VectorField& u0, const SolverConfig& cfg);
Trajectory solve(const VectorField& u0, const SolverConfig& cfg, const DyadicPartition& part);

struct SolveOutcome {
    Trajectory trajectory;
    std::optional<BlowupInfo> blowup;
};
SolveOutcome try_solve(const VectorField& u0, const SolverConfig& cfg,
                       const DyadicPartition& part);

// Iterates of the frozen-coefficient scheme
//   d_t u^{n+1} + (u^n . grad) u^{n+1} = p_op(u^n),  u^{n+1}(0) = S_{n+1} u0,
// starting from u^0 = 0 and integrated with the same spectral RK4. Returns
// the trajectories of u^1 ... u^{n_iters}.
std::vector<Trajectory> picard_solve(const VectorField& u0, int n_iters,
                                     const SolverConfig& cfg, const DyadicPartition& part);

// b_n^m = ||(u^{n+m} - u^n)(T)|| in B^{s-1}_{p,inf}, for n = 1 .. K-m where
// K = iterates.size(). Entry [i] holds b_{i+1}^m.
std::vector<double> cauchy_diagnostic(const std::vector<Trajectory>& iterates, int m,
                                      const SpaceParams& lowered, const DyadicPartition& part);

std::string trajectory_csv(const Trajectory& traj);

}  // namespace epspectra

#endif
