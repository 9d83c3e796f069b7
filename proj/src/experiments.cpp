#include "epspectra/experiments.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "epspectra/ep_dynamics.hpp"
#include "epspectra/spectral_ops.hpp"
#include "epspectra/stats.hpp"

namespace epspectra {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void param(ExperimentReport& rep, const std::string& key, const std::string& v) {
    rep.parameters.emplace_back(key, v);
}
void param(ExperimentReport& rep, const std::string& key, double v) {
    rep.parameters.emplace_back(key, fmt(v));
}
void param(ExperimentReport& rep, const std::string& key, int v) {
    rep.parameters.emplace_back(key, std::to_string(v));
}

void describe_grid(ExperimentReport& rep, const PeriodicGrid& g) {
    param(rep, "dim", g.dim());
    param(rep, "points_per_axis", g.points_per_axis());
    param(rep, "period", g.period());
}

void describe_solver(ExperimentReport& rep, const SolverConfig& cfg) {
    param(rep, "dt", cfg.dt);
    param(rep, "t_final", cfg.t_final);
    param(rep, "dealias_fraction", cfg.dealias_fraction);
    param(rep, "cfl_safety", cfg.cfl_safety);
}

void describe_space(ExperimentReport& rep, const SpaceParams& sp) {
    param(rep, "s", sp.s);
    param(rep, "p", sp.p);
    param(rep, "index", sp.index);
    param(rep, "kind", sp.kind == SpaceKind::Besov ? "besov" : "triebel-lizorkin");
}

// least-squares slope of log(y) against log(x), restricted to positive pairs;
// NaN when fewer than two survive
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] > 0.0 && y[i] > 0.0) {
            lx.push_back(std::log(x[i]));
            ly.push_back(std::log(y[i]));
        }
    if (lx.size() < 2) return kNaN;
    return least_squares_slope(lx, ly);
}

// slope of log2(y) against integer labels n
double log2_slope(const std::vector<double>& n, const std::vector<double>& y) {
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < n.size(); ++i)
        if (y[i] > 0.0) {
            lx.push_back(n[i]);
            ly.push_back(std::log2(y[i]));
        }
    if (lx.size() < 2) return kNaN;
    return least_squares_slope(lx, ly);
}

ScalarField first_component_product(const VectorField& a, const VectorField& b_deriv_src,
                                    int axis) {
    return sparse_product(a[0], spectral_derivative(b_deriv_src[0], axis));
}

// dyadic sample times t_final * 2^{-k} that land on whole steps, ascending
std::vector<double> dyadic_times(const SolverConfig& cfg) {
    const long long steps = std::llround(cfg.t_final / cfg.dt);
    std::vector<double> ts;
    for (long long s = steps; s >= 1; s /= 2) {
        ts.push_back(double(s) * cfg.dt);
        if (s % 2 != 0) break;
    }
    std::reverse(ts.begin(), ts.end());
    return ts;
}

}  // namespace

BumpProfile BumpProfile::make(const PeriodicGrid& g, int d) {
    if (d != g.dim())
        throw std::invalid_argument("bump: profile dimension must match the grid");
    const double plateau = std::pow(4.0, -d);
    const double support = std::pow(2.0, -d);
    if (g.frequency_unit() >= plateau)
        throw std::invalid_argument("bump: under-resolved plateau, lattice spacing "
                                    "must stay below 4^-d");
    SmoothCutoff cut{plateau, support};
    const int n = g.points_per_axis();
    std::vector<double> values(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const int k = i < n / 2 ? i : i - n;
        values[std::size_t(i)] = cut(std::abs(k * g.frequency_unit()));
    }
    return BumpProfile(g, d, cut, std::move(values));
}

ScalarField BumpProfile::axis_profile() const {
    const PeriodicGrid axis(1, grid_.points_per_axis(), grid_.period());
    std::vector<std::complex<double>> coeffs(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i)
        coeffs[i] = values_[i] / grid_.period();
    return ScalarField::from_coefficients(axis, std::move(coeffs));
}

VectorField make_fn(int n, const PeriodicGrid& g, double s, const BumpProfile& bump) {
    if (bump.grid() != g)
        throw std::invalid_argument("make_fn: bump was built for a different grid");
    if (n < 0) throw std::invalid_argument("make_fn: n must be nonnegative");
    const double lambda = (17.0 / 12.0) * std::ldexp(1.0, n);
    const double fu = g.frequency_unit();
    const double k_lambda = lambda / fu;
    if (std::abs(k_lambda - std::round(k_lambda)) > 1e-9)
        throw std::invalid_argument("make_fn: oscillation frequency off the lattice");
    // headroom so the 2/3 band still contains the whole dyadic annulus at n
    if (g.max_frequency() + 1e-9 < 4.0 * std::ldexp(1.0, n))
        throw std::invalid_argument("make_fn: unresolved n, need max frequency >= 4*2^n");

    const double amp = std::exp2(-double(n) * s);
    const double inv_period = 1.0 / g.period();
    std::vector<std::complex<double>> coeffs(g.total_points());
    for_each_mode(g, [&](std::size_t flat, std::span<const int>,
                         std::span<const double> xi) {
        const double lobe = bump.value(xi[0] + lambda) - bump.value(xi[0] - lambda);
        if (lobe == 0.0) return;
        double transverse = inv_period;
        for (std::size_t a = 1; a < xi.size(); ++a)
            transverse *= bump.value(xi[a]) * inv_period;
        coeffs[flat] = std::complex<double>(0.0, 0.5 * amp * lobe) * transverse;
    });

    std::vector<ScalarField> comps;
    comps.push_back(ScalarField::from_coefficients(g, std::move(coeffs)));
    for (int c = 1; c < g.dim(); ++c) comps.push_back(ScalarField::zeros(g));
    return VectorField(std::move(comps));
}

VectorField make_gn(int n, const PeriodicGrid& g, const BumpProfile& bump) {
    if (bump.grid() != g)
        throw std::invalid_argument("make_gn: bump was built for a different grid");
    if (n < 0) throw std::invalid_argument("make_gn: n must be nonnegative");
    const double amp = std::exp2(-double(n));
    const double inv_period = 1.0 / g.period();
    std::vector<std::complex<double>> coeffs(g.total_points());
    for_each_mode(g, [&](std::size_t flat, std::span<const int>,
                         std::span<const double> xi) {
        double v = amp;
        for (double x : xi) v *= bump.value(x) * inv_period;
        if (v != 0.0) coeffs[flat] = v;
    });

    std::vector<ScalarField> comps;
    comps.push_back(ScalarField::from_coefficients(g, std::move(coeffs)));
    for (int c = 1; c < g.dim(); ++c) comps.push_back(ScalarField::zeros(g));
    return VectorField(std::move(comps));
}

ScalarField sparse_product(const ScalarField& a, const ScalarField& b) {
    const PeriodicGrid& g = a.grid();
    if (g != b.grid())
        throw std::invalid_argument("sparse_product: mismatched grids");

    struct Mode {
        std::array<int, PeriodicGrid::max_dim> k;
        std::complex<double> c;
    };
    auto collect = [&g](const ScalarField& f) {
        std::vector<Mode> modes;
        const auto& coeffs = f.coefficients();
        for_each_mode(g, [&](std::size_t flat, std::span<const int> k,
                             std::span<const double>) {
            if (coeffs[flat] == 0.0) return;
            Mode m{};
            std::copy(k.begin(), k.end(), m.k.begin());
            m.c = coeffs[flat];
            modes.push_back(m);
        });
        return modes;
    };

    const std::vector<Mode> ma = collect(a);
    const std::vector<Mode> mb = collect(b);
    const int d = g.dim();
    const int bound = g.points_per_axis() / 2 - 1;

    std::vector<std::complex<double>> out(g.total_points());
    std::array<int, PeriodicGrid::max_dim> ks{};
    for (const Mode& x : ma)
        for (const Mode& y : mb) {
            for (int axis = 0; axis < d; ++axis) {
                ks[std::size_t(axis)] = x.k[std::size_t(axis)] + y.k[std::size_t(axis)];
                if (std::abs(ks[std::size_t(axis)]) > bound)
                    throw std::domain_error("sparse_product: product mode outside the "
                                            "representable band");
            }
            out[g.mode_index(std::span<const int>(ks.data(), std::size_t(d)))] += x.c * y.c;
        }
    return ScalarField::from_coefficients(g, std::move(out));
}

std::string ExperimentReport::csv() const {
    std::string out;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out += ',';
        out += columns[i];
    }
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += fmt(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string ExperimentReport::json() const {
    using nlohmann::ordered_json;
    auto num = [](double v) {
        return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr);
    };
    ordered_json j;
    j["name"] = name;
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : parameters) params[k] = v;
    j["parameters"] = params;
    ordered_json sc = ordered_json::object();
    for (const auto& [k, v] : scalars) sc[k] = num(v);
    j["scalars"] = sc;
    ordered_json vd = ordered_json::object();
    for (const auto& [k, v] : verdicts) vd[k] = v;
    j["verdicts"] = vd;
    auto table = [&](const std::vector<std::string>& cols,
                     const std::vector<std::vector<double>>& rws) {
        ordered_json t;
        t["columns"] = cols;
        ordered_json data = ordered_json::array();
        for (const auto& row : rws) {
            ordered_json r = ordered_json::array();
            for (double v : row) r.push_back(num(v));
            data.push_back(r);
        }
        t["rows"] = data;
        return t;
    };
    j["table"] = table(columns, rows);
    ordered_json auxes = ordered_json::array();
    for (const AuxTable& t : aux) {
        ordered_json a = table(t.columns, t.rows);
        a["name"] = t.name;
        auxes.push_back(a);
    }
    j["aux"] = auxes;
    return j.dump(2) + "\n";
}

double ExperimentReport::scalar(const std::string& key) const {
    for (const auto& [k, v] : scalars)
        if (k == key) return v;
    throw std::out_of_range("report scalar not found: " + key);
}

bool ExperimentReport::verdict(const std::string& key) const {
    for (const auto& [k, v] : verdicts)
        if (k == key) return v;
    throw std::out_of_range("report verdict not found: " + key);
}

bool ExperimentReport::all_verdicts_hold() const {
    return std::all_of(verdicts.begin(), verdicts.end(),
                       [](const auto& kv) { return kv.second; });
}

ExperimentReport prop31_check(const VectorField& u0, const std::vector<double>& t_list,
                              const SpaceParams& sp, const DyadicPartition& part,
                              const SolverConfig& cfg) {
    if (t_list.empty()) throw std::invalid_argument("prop31_check: empty time list");
    if (sp.kind != SpaceKind::TriebelLizorkin)
        throw std::invalid_argument("prop31_check: expects a Triebel-Lizorkin space");

    SolverConfig run = cfg;
    run.t_final = *std::max_element(t_list.begin(), t_list.end());
    run.snapshot_times = t_list;
    run.s = sp.s;
    run.p = sp.p;
    run.r = sp.index;
    run.diag_stride = int(std::max<long long>(1, std::llround(run.t_final / run.dt) / 4));

    const Trajectory traj = solve(u0, run, part);
    const VectorField drift = u0_functional(u0, cfg.dealias_fraction);

    ExperimentReport rep;
    rep.name = "prop31";
    describe_grid(rep, u0.grid());
    describe_space(rep, sp);
    describe_solver(rep, run);
    rep.columns = {"t", "e_quadratic", "e_linear"};

    std::vector<double> ts(t_list), e2, e1;
    std::sort(ts.begin(), ts.end());
    for (double t : ts) {
        const VectorField& state = traj.state_at(t);
        e2.push_back(tl_norm(state - u0 + t * drift, sp, part));
        e1.push_back(tl_norm(state - u0, sp, part));
        rep.rows.push_back({t, e2.back(), e1.back()});
    }

    const double slope2 = loglog_slope(ts, e2);
    const double slope1 = loglog_slope(ts, e1);
    rep.scalars = {{"slope_quadratic", slope2}, {"slope_linear", slope1}};
    rep.verdicts = {{"quadratic_order", slope2 >= 1.9},
                    {"linear_order", std::abs(slope1 - 1.0) <= 0.1}};
    return rep;
}

ExperimentReport nonuniform_experiment(const PeriodicGrid& g, int n_lo, int n_hi,
                                       double s, double p, double r, double t_probe,
                                       const SolverConfig& cfg) {
    if (n_lo > n_hi) throw std::invalid_argument("nonuniform: empty n range");
    const DyadicPartition part = DyadicPartition::build(g);
    const BumpProfile bump = BumpProfile::make(g, g.dim());
    const SpaceParams sp = SpaceParams::triebel_lizorkin(s, p, r);

    SolverConfig run = cfg;
    run.s = s;
    run.p = p;
    run.r = r;
    const std::vector<double> ts = dyadic_times(run);
    run.snapshot_times = ts;
    run.diag_stride = int(std::max<long long>(1, std::llround(run.t_final / run.dt) / 4));

    if (t_probe > 0.0) {
        const bool listed = std::any_of(ts.begin(), ts.end(), [&](double t) {
            return std::abs(t - t_probe) <= 1e-9;
        });
        if (!listed)
            throw std::invalid_argument("nonuniform: t_probe must be one of the dyadic "
                                        "sample times");
    }

    ExperimentReport rep;
    rep.name = "nonuniform";
    describe_grid(rep, g);
    describe_space(rep, sp);
    describe_solver(rep, run);
    param(rep, "n_lo", n_lo);
    param(rep, "n_hi", n_hi);
    param(rep, "t_probe_requested", t_probe);
    rep.columns = {"n", "delta0", "delta_t", "ratio", "slope"};

    struct Cell {
        int n;
        double delta0 = kNaN;
        double lin = kNaN;
        bool completed = false;
        bool has_admissible = false;
        double t_admissible = kNaN;              // largest budget-respecting time
        std::vector<double> delta, e_u, e_v;     // per sample time
    };
    std::vector<Cell> cells;

    AuxTable series;
    series.name = "separations";
    series.columns = {"n", "t", "delta", "e_u", "e_v", "within_budget"};

    for (int n = n_lo; n <= n_hi; ++n) {
        Cell cell;
        cell.n = n;
        const VectorField u0 = make_fn(n, g, s, bump);
        const VectorField gn = make_gn(n, g, bump);
        const VectorField v0 = u0 + gn;
        cell.delta0 = tl_norm(v0 - u0, sp, part);
        cell.lin = tl_norm(first_component_product(gn, u0, 0), sp, part);

        const VectorField du = u0_functional(u0, run.dealias_fraction);
        const VectorField dv = u0_functional(v0, run.dealias_fraction);

        const SolveOutcome su = try_solve(u0, run, part);
        const SolveOutcome sv = try_solve(v0, run, part);
        cell.completed = !su.blowup && !sv.blowup;
        if (cell.completed) {
            for (double t : ts) {
                const VectorField& a = su.trajectory.state_at(t);
                const VectorField& b = sv.trajectory.state_at(t);
                cell.delta.push_back(tl_norm(b - a, sp, part));
                cell.e_u.push_back(tl_norm(a - u0 + t * du, sp, part));
                cell.e_v.push_back(tl_norm(b - v0 + t * dv, sp, part));
                const bool ok = cell.e_u.back() + cell.e_v.back() <= 0.25 * t * cell.lin;
                if (ok) {
                    cell.has_admissible = true;
                    cell.t_admissible = t;
                }
                series.rows.push_back({double(n), t, cell.delta.back(), cell.e_u.back(),
                                       cell.e_v.back(), ok ? 1.0 : 0.0});
            }
        }
        cells.push_back(std::move(cell));
    }

    bool all_completed = true, budget_found = true;
    double probe = t_probe;
    if (probe <= 0.0) {
        probe = ts.back();
        for (const Cell& c : cells) {
            if (!c.completed) {
                all_completed = false;
                continue;
            }
            if (!c.has_admissible) {
                budget_found = false;
                probe = std::min(probe, ts.front());
            } else {
                probe = std::min(probe, c.t_admissible);
            }
        }
    } else {
        for (const Cell& c : cells) all_completed = all_completed && c.completed;
    }

    std::vector<double> ns, d0s, ratios;
    for (const Cell& c : cells) {
        double delta_probe = kNaN, ratio = kNaN, slope = kNaN;
        if (c.completed) {
            for (std::size_t i = 0; i < ts.size(); ++i)
                if (std::abs(ts[i] - probe) <= 1e-9) delta_probe = c.delta[i];
            ratio = delta_probe / probe;
            slope = loglog_slope(ts, c.delta);
            ns.push_back(double(c.n));
            d0s.push_back(c.delta0);
            ratios.push_back(ratio);
        }
        rep.rows.push_back({double(c.n), c.delta0, delta_probe, ratio, slope});
    }

    const double c0 = ratios.empty() ? kNaN
                                     : *std::min_element(ratios.begin(), ratios.end());
    const double cmax = ratios.empty() ? kNaN
                                       : *std::max_element(ratios.begin(), ratios.end());
    const double d0_slope = log2_slope(ns, d0s);

    rep.scalars = {{"t_probe", probe},
                   {"c0", c0},
                   {"ratio_spread", cmax / c0},
                   {"delta0_slope", d0_slope},
                   {"lin_last", cells.empty() ? kNaN : cells.back().lin}};
    rep.verdicts = {{"all_n_completed", all_completed},
                    {"budget_found", budget_found},
                    {"separation_positive", c0 > 0.0},
                    {"initial_distance_decays", d0_slope < 0.0}};
    rep.aux.push_back(std::move(series));
    return rep;
}

ExperimentReport rl_lower_bound(int n_lo, int n_hi, double s, double p,
                                const BumpProfile& bump) {
    if (n_lo > n_hi) throw std::invalid_argument("rl_lower_bound: empty n range");
    const PeriodicGrid& g = bump.grid();
    const DyadicPartition part = DyadicPartition::build(g);
    const SpaceParams sp = SpaceParams::triebel_lizorkin(s, p, 2.0);

    ExperimentReport rep;
    rep.name = "rllimit";
    describe_grid(rep, g);
    param(rep, "s", s);
    param(rep, "p", p);
    param(rep, "n_lo", n_lo);
    param(rep, "n_hi", n_hi);
    param(rep, "plateau_radius", bump.plateau_radius());
    param(rep, "support_radius", bump.support_radius());
    rep.columns = {"n", "weighted_lp", "seminorm", "rel_change", "cross_gg", "cross_fg"};

    bool support_ok = true;
    double identity_gap = 0.0;
    std::vector<double> ns, vals, cgg, cfgv;
    double prev = kNaN;
    for (int n = n_lo; n <= n_hi; ++n) {
        const VectorField fn = make_fn(n, g, s, bump);
        const VectorField gn = make_gn(n, g, bump);
        const ScalarField prod = first_component_product(gn, fn, 0);

        const double lambda = (17.0 / 12.0) * std::ldexp(1.0, n);
        const auto& coeffs = prod.coefficients();
        for_each_mode(g, [&](std::size_t flat, std::span<const int>,
                             std::span<const double> xi) {
            if (coeffs[flat] == 0.0) return;
            double rho_sq = 0.0;
            for (double x : xi) rho_sq += x * x;
            const double rho = std::sqrt(rho_sq);
            if (rho < lambda - 1.0 - 1e-9 || rho > lambda + 1.0 + 1e-9) support_ok = false;
        });

        const double val = std::exp2(double(n) * s) * lp_norm(prod, p);
        const double semi = tl_seminorm(prod, sp, part);
        identity_gap = std::max(identity_gap, std::abs(semi - val) / val);

        const double rel = std::isnan(prev) ? kNaN : std::abs(val - prev) / prev;
        const double gg = tl_norm(first_component_product(gn, gn, 0), sp, part);
        const double fg = tl_norm(first_component_product(fn, gn, 0), sp, part);
        rep.rows.push_back({double(n), val, semi, rel, gg, fg});
        ns.push_back(double(n));
        vals.push_back(val);
        cgg.push_back(gg);
        cfgv.push_back(fg);
        prev = val;
    }

    const double final_rel = rep.rows.size() >= 2 ? rep.rows.back()[3] : kNaN;
    const double gg_slope = log2_slope(ns, cgg);
    const double fg_slope = log2_slope(ns, cfgv);
    rep.scalars = {{"limit", vals.back()},
                   {"final_rel_change", final_rel},
                   {"identity_gap_max", identity_gap},
                   {"cross_gg_slope", gg_slope},
                   {"cross_fg_slope", fg_slope}};
    rep.verdicts = {{"support_exact", support_ok},
                    {"shortcut_identity", identity_gap <= 1e-10},
                    {"converged", final_rel <= 0.05},
                    {"cross_decay", gg_slope <= -0.5 && fg_slope <= -0.5}};
    return rep;
}

ExperimentReport continuous_dependence_experiment(const VectorField& u0,
                                                  const std::vector<int>& cutoffs,
                                                  const SpaceParams& sp,
                                                  const DyadicPartition& part,
                                                  const SolverConfig& cfg) {
    if (cutoffs.empty())
        throw std::invalid_argument("continuous dependence: no cutoffs given");
    if (sp.kind != SpaceKind::TriebelLizorkin)
        throw std::invalid_argument("continuous dependence: expects a Triebel-Lizorkin space");
    std::vector<int> order(cutoffs);
    std::sort(order.begin(), order.end());

    SolverConfig run = cfg;
    run.s = sp.s;
    run.p = sp.p;
    run.r = sp.index;
    run.diag_stride = int(std::max<long long>(1, std::llround(run.t_final / run.dt) / 4));

    ExperimentReport rep;
    rep.name = "contdep";
    describe_grid(rep, u0.grid());
    describe_space(rep, sp);
    describe_solver(rep, run);

    const VectorField u_final = solve(u0, run, part).final_state();

    rep.columns = {"cutoff", "denominator", "numerator", "ratio"};
    std::vector<double> dens, nums, ratios;
    for (int N : order) {
        const VectorField w0 = low_pass(u0, N, part);
        const double den = tl_norm(u0 - w0, sp, part);
        const VectorField w_final = solve(w0, run, part).final_state();
        const double num = tl_norm(u_final - w_final, sp, part);
        const double ratio = den > 0.0 ? num / den : 0.0;
        rep.rows.push_back({double(N), den, num, ratio});
        if (den > 0.0) {
            dens.push_back(den);
            nums.push_back(num);
            ratios.push_back(ratio);
        }
    }

    bool den_decreasing = true;
    for (std::size_t i = 1; i < dens.size(); ++i)
        den_decreasing = den_decreasing && dens[i] <= dens[i - 1];
    const bool bounded =
        !ratios.empty() &&
        *std::max_element(ratios.begin(), ratios.end()) <= 10.0 * ratios.front();
    const bool vanish = dens.size() >= 2 && dens.back() <= 0.5 * dens.front() &&
                        nums.back() <= 0.5 * nums.front();

    rep.scalars = {{"ratio_first", ratios.empty() ? kNaN : ratios.front()},
                   {"ratio_max", ratios.empty()
                                     ? kNaN
                                     : *std::max_element(ratios.begin(), ratios.end())},
                   {"denominator_last", dens.empty() ? kNaN : dens.back()},
                   {"numerator_last", nums.empty() ? kNaN : nums.back()}};
    rep.verdicts = {{"ratio_bounded", bounded},
                    {"denominator_decreasing", den_decreasing},
                    {"distances_vanish", vanish}};
    return rep;
}

ExperimentReport picard_experiment(const VectorField& u0, int n_iters,
                                   const SolverConfig& cfg, const DyadicPartition& part) {
    if (n_iters < 2)
        throw std::invalid_argument("picard experiment: need at least two iterates");
    const SpaceParams lowered =
        SpaceParams::besov(cfg.s - 1.0, cfg.p, std::numeric_limits<double>::infinity());

    const std::vector<Trajectory> iterates = picard_solve(u0, n_iters, cfg, part);
    const std::vector<double> gaps = cauchy_diagnostic(iterates, 1, lowered, part);
    const VectorField reference = solve(u0, cfg, part).final_state();
    const double final_gap = besov_norm(
        iterates[std::size_t(n_iters - 2)].final_state() - reference, lowered, part);

    ExperimentReport rep;
    rep.name = "picard";
    describe_grid(rep, u0.grid());
    describe_solver(rep, cfg);
    param(rep, "n_iters", n_iters);
    param(rep, "s", cfg.s);
    param(rep, "p", cfg.p);
    rep.columns = {"n", "gap"};

    std::vector<double> ns;
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        rep.rows.push_back({double(i + 1), gaps[i]});
        ns.push_back(double(i + 1));
    }
    const double slope = log2_slope(ns, gaps);

    rep.scalars = {{"gap_slope", slope},
                   {"final_gap", final_gap},
                   {"final_gap_bound", gaps.back()}};
    rep.verdicts = {{"geometric_decay", slope <= -0.5},
                    {"matches_solver", final_gap <= gaps.back()}};
    return rep;
}

}  // namespace epspectra
