#include "epspectra/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <utility>

#include "epspectra/spectral_ops.hpp"

namespace epspectra {

namespace {

constexpr double kTimeTol = 1e-9;

// sup_x Frobenius norm of the velocity gradient; the blow-up guard quantity
double grad_sup(const VectorField& u) {
    const auto jac = jacobian(u);
    const int d = u.size();
    const std::size_t total = u.grid().total_points();
    double best = 0.0;
    for (std::size_t idx = 0; idx < total; ++idx) {
        double sq = 0.0;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                const double v = jac[std::size_t(i)][std::size_t(j)].samples()[idx];
                sq += v * v;
            }
        best = std::max(best, sq);
    }
    return std::sqrt(best);
}

// int |u|^2 + |grad u|^2 dx, summed on the coefficient side where each
// derivative is the exact multiplier i*xi
double h1_energy(const VectorField& u) {
    const PeriodicGrid& g = u.grid();
    double sum = 0.0;
    for (int c = 0; c < u.size(); ++c) {
        const auto& coeffs = u[c].coefficients();
        for_each_mode(g, [&](std::size_t flat, std::span<const int>,
                             std::span<const double> xi) {
            double xi_sq = 0.0;
            for (double x : xi) xi_sq += x * x;
            sum += (1.0 + xi_sq) * std::norm(coeffs[flat]);
        });
    }
    double vol = 1.0;
    for (int a = 0; a < g.dim(); ++a) vol *= g.period();
    return vol * sum;
}

DiagnosticsRow make_row(double t, const VectorField& u, double grad,
                        const SolverConfig& cfg, const DyadicPartition& part) {
    const SpaceParams tl = SpaceParams::triebel_lizorkin(cfg.s, cfg.p, cfg.r);
    const SpaceParams low =
        SpaceParams::besov(cfg.s - 1.0, cfg.p, std::numeric_limits<double>::infinity());
    return DiagnosticsRow{t, tl_norm(u, tl, part), besov_norm(u, low, part), grad,
                          h1_energy(u)};
}

void check_cfl(const VectorField& u, double dt, double t, const SolverConfig& cfg) {
    const double speed = linf_norm(u);
    const double xi_max = u.grid().max_frequency();
    if (dt * xi_max * speed > cfg.cfl_safety)
        throw CflViolation(t, 0.5 * dt);
}

struct StepPlan {
    long long steps;
    std::vector<long long> snapshot_steps;  // sorted, includes 0 and steps
};

StepPlan plan_steps(const SolverConfig& cfg) {
    if (!(cfg.dt > 0.0) || !(cfg.t_final > 0.0))
        throw std::invalid_argument("dt and t_final must be positive");
    const long long steps = std::llround(cfg.t_final / cfg.dt);
    if (steps < 1 || std::abs(double(steps) * cfg.dt - cfg.t_final) >
                         kTimeTol * std::max(1.0, cfg.t_final))
        throw std::invalid_argument("t_final must be an integer multiple of dt");
    if (cfg.diag_stride < 1)
        throw std::invalid_argument("diag_stride must be >= 1");

    StepPlan plan{steps, {0, steps}};
    for (double t : cfg.snapshot_times) {
        const long long k = std::llround(t / cfg.dt);
        if (k < 0 || k > steps || std::abs(double(k) * cfg.dt - t) > kTimeTol)
            throw std::invalid_argument("snapshot times must be step multiples inside [0, t_final]");
        plan.snapshot_steps.push_back(k);
    }
    std::sort(plan.snapshot_steps.begin(), plan.snapshot_steps.end());
    plan.snapshot_steps.erase(
        std::unique(plan.snapshot_steps.begin(), plan.snapshot_steps.end()),
        plan.snapshot_steps.end());
    return plan;
}

SolveOutcome run_solve(const VectorField& u0, const SolverConfig& cfg,
                       const DyadicPartition& part) {
    if (part.grid() != u0.grid())
        throw std::invalid_argument("partition grid does not match the field");
    const StepPlan plan = plan_steps(cfg);

    const double grad0 = grad_sup(u0);
    const double threshold =
        cfg.blowup_threshold > 0.0
            ? cfg.blowup_threshold
            : (grad0 > 0.0 ? 10.0 * grad0 : std::numeric_limits<double>::infinity());

    SolveOutcome out;
    VectorField u = u0;
    std::size_t next_snap = 0;
    auto visit = [&](long long step, double grad) {
        const double t = double(step) * cfg.dt;
        if (next_snap < plan.snapshot_steps.size() && plan.snapshot_steps[next_snap] == step) {
            out.trajectory.times.push_back(t);
            out.trajectory.states.push_back(u);
            ++next_snap;
        }
        if (step % cfg.diag_stride == 0 || step == plan.steps)
            out.trajectory.diagnostics.push_back(make_row(t, u, grad, cfg, part));
    };

    visit(0, grad0);
    for (long long step = 0; step < plan.steps; ++step) {
        const double t = double(step) * cfg.dt;
        check_cfl(u, cfg.dt, t, cfg);
        u = rk4_step(u, cfg.dt, cfg);
        const double grad = grad_sup(u);
        if (!(grad <= threshold) || !std::isfinite(grad)) {
            out.blowup = BlowupInfo{double(step + 1) * cfg.dt, grad};
            // keep what integrated cleanly; the tripped state is not recorded
            return out;
        }
        visit(step + 1, grad);
    }
    return out;
}

// Value at t_{k+1/2} from the four nearest stored nodes (cubic, one-sided at
// the ends). Requires at least four nodes.
VectorField midpoint_value(const std::vector<VectorField>& nodes, std::size_t k) {
    static constexpr double w_mid[4] = {-1.0 / 16, 9.0 / 16, 9.0 / 16, -1.0 / 16};
    static constexpr double w_first[4] = {0.3125, 0.9375, -0.3125, 0.0625};
    static constexpr double w_last[4] = {0.0625, -0.3125, 0.9375, 0.3125};
    const std::size_t m = nodes.size() - 1;  // interval count
    std::size_t base;
    const double* w;
    if (k == 0) {
        base = 0;
        w = w_first;
    } else if (k == m - 1) {
        base = m - 3;
        w = w_last;
    } else {
        base = k - 1;
        w = w_mid;
    }
    VectorField acc = w[0] * nodes[base];
    for (int i = 1; i < 4; ++i) acc = acc + w[i] * nodes[base + std::size_t(i)];
    return acc;
}

}  // namespace

const VectorField& Trajectory::state_at(double t) const {
    for (std::size_t i = 0; i < times.size(); ++i)
        if (std::abs(times[i] - t) <= kTimeTol * std::max(1.0, std::abs(t)))
            return states[i];
    throw std::out_of_range("no snapshot stored at t = " + std::to_string(t));
}

VectorField rk4_step(const VectorField& u, double dt, const SolverConfig& cfg) {
    check_cfl(u, dt, 0.0, cfg);
    const double f = cfg.dealias_fraction;
    const VectorField k1 = ep_rhs(u, f);
    const VectorField k2 = ep_rhs(u + (0.5 * dt) * k1, f);
    const VectorField k3 = ep_rhs(u + (0.5 * dt) * k2, f);
    const VectorField k4 = ep_rhs(u + dt * k3, f);
    return u + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

Trajectory solve(const VectorField& u0, const SolverConfig& cfg) {
    return solve(u0, cfg, DyadicPartition::build(u0.grid()));
}

Trajectory solve(const VectorField& u0, const SolverConfig& cfg,
                 const DyadicPartition& part) {
    SolveOutcome out = run_solve(u0, cfg, part);
    if (out.blowup) throw BlowupDetected(out.blowup->time, out.blowup->gradient_norm);
    return std::move(out.trajectory);
}

SolveOutcome try_solve(const VectorField& u0, const SolverConfig& cfg,
                       const DyadicPartition& part) {
    return run_solve(u0, cfg, part);
}

std::vector<Trajectory> picard_solve(const VectorField& u0, int n_iters,
                                     const SolverConfig& cfg, const DyadicPartition& part) {
    if (part.grid() != u0.grid())
        throw std::invalid_argument("partition grid does not match the field");
    if (n_iters < 1) throw std::invalid_argument("need at least one iterate");
    const StepPlan plan = plan_steps(cfg);
    if (plan.steps < 3)
        throw std::invalid_argument("frozen-coefficient midpoints need at least 3 steps");
    const std::size_t n_nodes = std::size_t(plan.steps) + 1;
    const double f = cfg.dealias_fraction;

    // u^0 = 0, so its node values and source terms all vanish
    std::vector<VectorField> prev_states(n_nodes, VectorField::zeros(u0.grid()));
    std::vector<VectorField> prev_sources = prev_states;

    std::vector<Trajectory> iterates;
    iterates.reserve(std::size_t(n_iters));

    for (int iter = 1; iter <= n_iters; ++iter) {
        std::vector<VectorField> states;
        std::vector<VectorField> sources;
        states.reserve(n_nodes);
        sources.reserve(n_nodes);
        states.push_back(low_pass(u0, iter, part));
        sources.push_back(p_op(states[0], f));

        Trajectory traj;
        std::size_t next_snap = 0;
        auto visit = [&](long long step) {
            const double t = double(step) * cfg.dt;
            const VectorField& u = states[std::size_t(step)];
            if (next_snap < plan.snapshot_steps.size() &&
                plan.snapshot_steps[next_snap] == step) {
                traj.times.push_back(t);
                traj.states.push_back(u);
                ++next_snap;
            }
            if (step % cfg.diag_stride == 0 || step == plan.steps)
                traj.diagnostics.push_back(make_row(t, u, grad_sup(u), cfg, part));
        };
        visit(0);

        for (long long step = 0; step < plan.steps; ++step) {
            const std::size_t k = std::size_t(step);
            const double t = double(step) * cfg.dt;
            check_cfl(prev_states[k], cfg.dt, t, cfg);

            const VectorField a_half = midpoint_value(prev_states, k);
            const VectorField s_half = midpoint_value(prev_sources, k);
            const auto rhs = [&](const VectorField& a, const VectorField& src,
                                 const VectorField& w) {
                return src - convect(a, w, f);
            };
            const VectorField& w = states[k];
            const VectorField k1 = rhs(prev_states[k], prev_sources[k], w);
            const VectorField k2 = rhs(a_half, s_half, w + (0.5 * cfg.dt) * k1);
            const VectorField k3 = rhs(a_half, s_half, w + (0.5 * cfg.dt) * k2);
            const VectorField k4 =
                rhs(prev_states[k + 1], prev_sources[k + 1], w + cfg.dt * k3);
            states.push_back(w + (cfg.dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
            sources.push_back(p_op(states.back(), f));
            visit(step + 1);
        }

        iterates.push_back(std::move(traj));
        prev_states = std::move(states);
        prev_sources = std::move(sources);
    }
    return iterates;
}

std::vector<double> cauchy_diagnostic(const std::vector<Trajectory>& iterates, int m,
                                      const SpaceParams& lowered,
                                      const DyadicPartition& part) {
    const int count = int(iterates.size());
    if (m < 1 || m >= count)
        throw std::invalid_argument("offset must satisfy 1 <= m < number of iterates");
    std::vector<double> gaps;
    gaps.reserve(std::size_t(count - m));
    for (int i = 0; i + m < count; ++i) {
        const VectorField diff =
            iterates[std::size_t(i + m)].final_state() - iterates[std::size_t(i)].final_state();
        gaps.push_back(besov_norm(diff, lowered, part));
    }
    return gaps;
}

std::string trajectory_csv(const Trajectory& traj) {
    std::string out = "t,f_norm,besov_low,grad_linf,energy\n";
    char buf[192];
    for (const DiagnosticsRow& r : traj.diagnostics) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", r.t, r.f_norm,
                      r.besov_low, r.grad_linf, r.energy);
        out += buf;
    }
    return out;
}

}  // namespace epspectra
