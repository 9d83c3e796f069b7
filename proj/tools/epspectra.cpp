// Command-line front end: simulation, norm evaluation, and the named
// experiment drivers, with manifests that make every run reproducible.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "epspectra/ep_dynamics.hpp"
#include "epspectra/evolution.hpp"
#include "epspectra/experiments.hpp"
#include "epspectra/field_io.hpp"
#include "epspectra/initial_data.hpp"
#include "epspectra/littlewood_paley.hpp"
#include "epspectra/reporting.hpp"
#include "epspectra/spectral_ops.hpp"

namespace {

using namespace epspectra;
namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitBlowup = 3;

// smallest multiple of 24*pi whose frequency lattice resolves the bump
// plateau 4^{-d}
double default_period_for(int d) {
    const double base = 24.0 * std::numbers::pi;
    int m = 1;
    while (1.0 / (12.0 * m) >= std::pow(4.0, -d)) ++m;
    return base * m;
}

struct CommonOpts {
    int d = 1;
    int nx = 256;
    double period = 0.0;  // 0 = pick from dimension
    double s = 2.0;
    double p = 2.0;
    double r = 2.0;
    double dt = 0.0;      // 0 = command-specific default
    double tfinal = 0.0;  // likewise
    std::string out;
    int threads = 1;

    PeriodicGrid grid() const {
        return PeriodicGrid(d, nx, period > 0.0 ? period : default_period_for(d));
    }
};

struct InitOpts {
    std::string init = "random";
    double amplitude = 0.05;
    double width = 2.0;
    int kmax = 0;       // 0 = third of the axis resolution
    double decay = 0.0; // 0 = s + 1/2
    unsigned long long seed = 7;
};

void add_common(CLI::App* app, CommonOpts& c) {
    app->add_option("--d", c.d, "spatial dimension")->check(CLI::Range(1, 4));
    app->add_option("--nx", c.nx, "grid points per axis");
    app->add_option("--period", c.period, "torus period (0 = auto for the dimension)");
    app->add_option("--s", c.s, "regularity index s");
    app->add_option("--p", c.p, "integrability index p");
    app->add_option("--r", c.r, "inner index r");
    app->add_option("--dt", c.dt, "time step (0 = command default)");
    app->add_option("--tfinal", c.tfinal, "final time (0 = command default)");
    app->add_option("--out", c.out, "output directory");
    app->add_option("--threads", c.threads, "parallelism cap")->check(CLI::PositiveNumber);
    app->add_option("--config", "flat key=value config file; flags take precedence");
}

void add_init(CLI::App* app, InitOpts& i) {
    app->add_option("--init", i.init, "zero | gaussian | random | path to a field file");
    app->add_option("--amplitude", i.amplitude, "initial data amplitude");
    app->add_option("--width", i.width, "gaussian bump width parameter");
    app->add_option("--kmax", i.kmax, "random data band limit (0 = nx/3)");
    app->add_option("--decay", i.decay, "random data spectral decay (0 = s + 1/2)");
    app->add_option("--seed", i.seed, "random data seed");
}

VectorField build_initial(const PeriodicGrid& g, const CommonOpts& c, const InitOpts& i) {
    if (i.init == "zero") return VectorField::zeros(g);
    if (i.init == "gaussian") return smooth_bump_velocity(g, i.amplitude, i.width);
    if (i.init == "random") {
        const int kmax = i.kmax > 0 ? i.kmax : c.nx / 3;
        const double decay = i.decay > 0.0 ? i.decay : c.s + 0.5;
        return random_bandlimited_velocity(g, kmax, i.amplitude, decay, i.seed);
    }
    FieldFile file = read_field(i.init);
    if (file.grid != g)
        throw std::invalid_argument("field file grid differs from the requested grid");
    return file.as_velocity();
}

// CLI11 only consults a config option on the root app, and ours sits on each
// subcommand, so the file is spliced into the argument list by hand.  A flag
// already present on the command line shadows the file's value for that key.
std::vector<std::string> expand_config_args(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);

    std::string path;
    for (auto it = args.begin(); it != args.end();) {
        if (*it == "--config") {
            if (std::next(it) == args.end())
                throw std::runtime_error("--config expects a file path");
            path = *std::next(it);
            it = args.erase(it, std::next(it, 2));
        } else if (it->rfind("--config=", 0) == 0) {
            path = it->substr(9);
            it = args.erase(it);
        } else {
            ++it;
        }
    }
    if (path.empty()) return args;

    std::set<std::string> given;
    for (const auto& a : args)
        if (a.rfind("--", 0) == 0) given.insert(a.substr(2, a.find('=') - 2));

    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file " + path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line.front() == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line without '=': " + line);
        const std::string key = line.substr(0, eq);
        if (given.count(key)) continue;
        args.push_back("--" + key);
        args.push_back(line.substr(eq + 1));
    }
    return args;
}

std::string resolve_out(const std::string& flag_value, const std::string& command) {
    if (!flag_value.empty()) return flag_value;
    const char* root = std::getenv("EP_SPECTRA_OUT");
    return (fs::path(root ? root : ".") / ("run_" + command)).string();
}

void echo_common(RunManifest& m, const CommonOpts& c, const PeriodicGrid& g) {
    auto num = [](double v) {
        char b[40];
        std::snprintf(b, sizeof b, "%.17g", v);
        return std::string(b);
    };
    m.config.emplace_back("d", std::to_string(c.d));
    m.config.emplace_back("nx", std::to_string(c.nx));
    m.config.emplace_back("period", num(g.period()));
    m.config.emplace_back("s", num(c.s));
    m.config.emplace_back("p", num(c.p));
    m.config.emplace_back("r", num(c.r));
    m.config.emplace_back("threads", std::to_string(c.threads));
}

void echo_solver(RunManifest& m, const SolverConfig& cfg) {
    auto num = [](double v) {
        char b[40];
        std::snprintf(b, sizeof b, "%.17g", v);
        return std::string(b);
    };
    m.config.emplace_back("dt", num(cfg.dt));
    m.config.emplace_back("tfinal", num(cfg.t_final));
}

void echo_init(RunManifest& m, const InitOpts& i, const CommonOpts& c) {
    auto num = [](double v) {
        char b[40];
        std::snprintf(b, sizeof b, "%.17g", v);
        return std::string(b);
    };
    m.config.emplace_back("init", i.init);
    m.config.emplace_back("amplitude", num(i.amplitude));
    m.config.emplace_back("width", num(i.width));
    m.config.emplace_back("kmax", std::to_string(i.kmax > 0 ? i.kmax : c.nx / 3));
    m.config.emplace_back("decay", num(i.decay > 0.0 ? i.decay : c.s + 0.5));
    m.config.emplace_back("seed", std::to_string(i.seed));
}

class Stopwatch {
  public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

SolverConfig solver_config(const CommonOpts& c, double default_dt, double default_tfinal) {
    SolverConfig cfg;
    cfg.t_final = c.tfinal > 0.0 ? c.tfinal : default_tfinal;
    cfg.dt = c.dt > 0.0 ? c.dt : default_dt * cfg.t_final;
    cfg.s = c.s;
    cfg.p = c.p;
    cfg.r = c.r;
    return cfg;
}

int run_simulate(const CommonOpts& c, const InitOpts& init) {
    Stopwatch watch;
    const PeriodicGrid g = c.grid();
    const VectorField u0 = build_initial(g, c, init);
    SolverConfig cfg = solver_config(c, 1.0 / 128.0, 1.0);
    const DyadicPartition part = DyadicPartition::build(g);

    const SolveOutcome outcome = try_solve(u0, cfg, part);
    const std::string dir = resolve_out(c.out, "simulate");

    atomic_write_file((fs::path(dir) / "trajectory.csv").string(),
                      trajectory_csv(outcome.trajectory));
    if (!outcome.trajectory.states.empty())
        write_field((fs::path(dir) / "state.epsf").string(),
                    outcome.trajectory.final_state());

    RunManifest m;
    m.command = "simulate";
    echo_common(m, c, g);
    echo_solver(m, cfg);
    echo_init(m, init, c);
    m.config.emplace_back("out", dir);
    if (outcome.blowup)
        m.note = "gradient guard tripped at t = " + std::to_string(outcome.blowup->time) +
                 ", |grad u| = " + std::to_string(outcome.blowup->gradient_norm);
    m.wall_seconds = watch.seconds();
    write_manifest(dir, m);

    if (outcome.blowup) {
        std::cerr << m.note << "\n";
        return kExitBlowup;
    }
    std::cout << "wrote " << dir << "\n";
    return kExitOk;
}

int run_norms(const std::string& in_path, double s, double p, double index,
              const std::string& kind, const std::string& out) {
    const FieldFile file = read_field(in_path);
    const DyadicPartition part = DyadicPartition::build(file.grid);

    const bool besov_kind = kind == "besov";
    if (!besov_kind && kind != "tl" && kind != "triebel-lizorkin")
        throw std::invalid_argument("kind must be besov or tl");
    const SpaceParams sp = besov_kind ? SpaceParams::besov(s, p, index)
                                      : SpaceParams::triebel_lizorkin(s, p, index);

    double value = 0.0, lp = 0.0;
    std::vector<BlockNormRow> spectrum;
    if (file.is_velocity() && file.grid.dim() > 1) {
        const VectorField u = file.as_velocity();
        value = besov_kind ? besov_norm(u, sp, part) : tl_norm(u, sp, part);
        lp = lp_norm(u, p);
        spectrum = block_spectrum(u, sp, part);
    } else {
        if (file.components.size() != 1)
            throw std::invalid_argument("norms expects one component or one per dimension");
        const ScalarField& f = file.components.front();
        value = besov_kind ? besov_norm(f, sp, part) : tl_norm(f, sp, part);
        lp = lp_norm(f, p);
        spectrum = block_spectrum(f, sp, part);
    }

    std::cout << (besov_kind ? "besov " : "triebel_lizorkin ") << std::scientific << value
              << "\nlp " << lp << "\n";
    const std::string csv = block_spectrum_csv(spectrum);
    if (out.empty()) {
        std::cout << csv;
    } else {
        atomic_write_file((fs::path(out) / "spectrum.csv").string(), csv);
        std::cout << "wrote " << out << "\n";
    }
    return kExitOk;
}

int write_report(const ExperimentReport& rep, const RunManifest& manifest_base,
                 const std::string& dir, const Stopwatch& watch) {
    RunManifest m = manifest_base;
    m.wall_seconds = watch.seconds();
    atomic_write_file((fs::path(dir) / "report.json").string(), rep.json());
    atomic_write_file((fs::path(dir) / "report.csv").string(), rep.csv());
    write_manifest(dir, m);
    std::cout << "wrote " << dir << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pseudospectral laboratory for nonlocal transport dynamics"};
    app.require_subcommand(1);

    // simulate
    CommonOpts sim_c;
    InitOpts sim_init;
    CLI::App* sim = app.add_subcommand("simulate", "integrate and dump the trajectory");
    add_common(sim, sim_c);
    add_init(sim, sim_init);

    // norms
    std::string norms_in, norms_kind = "besov", norms_out;
    double norms_s = 2.0, norms_p = 2.0, norms_index = 2.0;
    CLI::App* norms = app.add_subcommand("norms", "evaluate block norms of a stored field");
    norms->add_option("--in", norms_in, "field file")->required();
    norms->add_option("--s", norms_s, "regularity index");
    norms->add_option("--p", norms_p, "integrability index");
    norms->add_option("--index", norms_index, "outer/inner index (inf allowed for besov)");
    norms->add_option("--kind", norms_kind, "besov | tl");
    norms->add_option("--out", norms_out, "directory for the spectrum CSV");
    norms->add_option("--config", "flat key=value config file; flags take precedence");

    // experiment group
    CLI::App* exp = app.add_subcommand("experiment", "run a named experiment");
    exp->require_subcommand(1);

    CommonOpts nu_c;
    nu_c.nx = 1 << 15;
    int nu_lo = 4, nu_hi = 8;
    double nu_tprobe = 0.0;
    CLI::App* nu = exp->add_subcommand("nonuniform", "separation of the oscillatory pairs");
    add_common(nu, nu_c);
    nu->add_option("--nlo", nu_lo, "first family index");
    nu->add_option("--nhi", nu_hi, "last family index");
    nu->add_option("--tprobe", nu_tprobe, "probe time (0 = auto budget)");

    CommonOpts p31_c;
    InitOpts p31_init;
    double p31_t0 = 0.25;
    int p31_levels = 5;
    CLI::App* p31 = exp->add_subcommand("prop31", "short-time expansion orders");
    add_common(p31, p31_c);
    add_init(p31, p31_init);
    p31->add_option("--t0", p31_t0, "largest sample time");
    p31->add_option("--levels", p31_levels, "number of halvings")->check(CLI::Range(2, 16));

    CommonOpts pic_c;
    pic_c.nx = 1 << 14;
    InitOpts pic_init;
    int pic_iters = 9;
    CLI::App* pic = exp->add_subcommand("picard", "frozen-coefficient iteration ladder");
    add_common(pic, pic_c);
    add_init(pic, pic_init);
    pic->add_option("--iters", pic_iters, "number of iterates")->check(CLI::Range(2, 32));

    CommonOpts cd_c;
    cd_c.nx = 1 << 12;
    InitOpts cd_init;
    int cd_lo = 2, cd_hi = 8;
    CLI::App* cd = exp->add_subcommand("contdep", "low-pass continuous dependence sweep");
    add_common(cd, cd_c);
    add_init(cd, cd_init);
    cd->add_option("--nlo", cd_lo, "first cutoff index");
    cd->add_option("--nhi", cd_hi, "last cutoff index");

    CommonOpts rl_c;
    rl_c.nx = 1 << 15;
    int rl_lo = 4, rl_hi = 8;
    CLI::App* rl = exp->add_subcommand("rllimit", "averaged lower-bound sequence");
    add_common(rl, rl_c);
    rl->add_option("--nlo", rl_lo, "first family index");
    rl->add_option("--nhi", rl_hi, "last family index");

    std::vector<std::string> args;
    try {
        args = expand_config_args(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (sim->parsed()) return run_simulate(sim_c, sim_init);
        if (norms->parsed())
            return run_norms(norms_in, norms_s, norms_p, norms_index, norms_kind, norms_out);

        if (nu->parsed()) {
            Stopwatch watch;
            SolverConfig cfg = solver_config(nu_c, 1.0 / 256.0, 0.5);
            const PeriodicGrid g = nu_c.grid();
            const ExperimentReport rep = nonuniform_experiment(
                g, nu_lo, nu_hi, nu_c.s, nu_c.p, nu_c.r, nu_tprobe, cfg);
            const std::string dir = resolve_out(nu_c.out, "nonuniform");
            RunManifest m;
            m.command = "experiment nonuniform";
            echo_common(m, nu_c, g);
            echo_solver(m, cfg);
            m.config.emplace_back("nlo", std::to_string(nu_lo));
            m.config.emplace_back("nhi", std::to_string(nu_hi));
            {
                char b[40];
                std::snprintf(b, sizeof b, "%.17g", nu_tprobe);
                m.config.emplace_back("tprobe", b);
            }
            m.config.emplace_back("out", dir);
            if (!rep.verdict("all_n_completed")) m.note = "blow-up flagged rows present";
            return write_report(rep, m, dir, watch);
        }
        if (p31->parsed()) {
            Stopwatch watch;
            const PeriodicGrid g = p31_c.grid();
            const VectorField u0 = build_initial(g, p31_c, p31_init);
            std::vector<double> ts;
            for (int k = 0; k < p31_levels; ++k) ts.push_back(std::ldexp(p31_t0, -k));
            SolverConfig cfg = solver_config(p31_c, 0.0, p31_t0);
            if (cfg.dt <= 0.0) cfg.dt = ts.back() / 16.0;
            const DyadicPartition part = DyadicPartition::build(g);
            const SpaceParams sp =
                SpaceParams::triebel_lizorkin(p31_c.s, p31_c.p, p31_c.r);
            const ExperimentReport rep = prop31_check(u0, ts, sp, part, cfg);
            const std::string dir = resolve_out(p31_c.out, "prop31");
            RunManifest m;
            m.command = "experiment prop31";
            echo_common(m, p31_c, g);
            echo_solver(m, cfg);
            echo_init(m, p31_init, p31_c);
            {
                char b[40];
                std::snprintf(b, sizeof b, "%.17g", p31_t0);
                m.config.emplace_back("t0", b);
            }
            m.config.emplace_back("levels", std::to_string(p31_levels));
            m.config.emplace_back("out", dir);
            return write_report(rep, m, dir, watch);
        }
        if (pic->parsed()) {
            Stopwatch watch;
            const PeriodicGrid g = pic_c.grid();
            const VectorField u0 = build_initial(g, pic_c, pic_init);
            SolverConfig cfg = solver_config(pic_c, 0.05, 0.2);
            const DyadicPartition part = DyadicPartition::build(g);
            const ExperimentReport rep = picard_experiment(u0, pic_iters, cfg, part);
            const std::string dir = resolve_out(pic_c.out, "picard");
            RunManifest m;
            m.command = "experiment picard";
            echo_common(m, pic_c, g);
            echo_solver(m, cfg);
            echo_init(m, pic_init, pic_c);
            m.config.emplace_back("iters", std::to_string(pic_iters));
            m.config.emplace_back("out", dir);
            return write_report(rep, m, dir, watch);
        }
        if (cd->parsed()) {
            Stopwatch watch;
            const PeriodicGrid g = cd_c.grid();
            const VectorField u0 = build_initial(g, cd_c, cd_init);
            SolverConfig cfg = solver_config(cd_c, 0.01, 0.25);
            const DyadicPartition part = DyadicPartition::build(g);
            const SpaceParams sp = SpaceParams::triebel_lizorkin(cd_c.s, cd_c.p, cd_c.r);
            std::vector<int> cutoffs;
            for (int n = cd_lo; n <= cd_hi; ++n) cutoffs.push_back(n);
            const ExperimentReport rep =
                continuous_dependence_experiment(u0, cutoffs, sp, part, cfg);
            const std::string dir = resolve_out(cd_c.out, "contdep");
            RunManifest m;
            m.command = "experiment contdep";
            echo_common(m, cd_c, g);
            echo_solver(m, cfg);
            echo_init(m, cd_init, cd_c);
            m.config.emplace_back("nlo", std::to_string(cd_lo));
            m.config.emplace_back("nhi", std::to_string(cd_hi));
            m.config.emplace_back("out", dir);
            return write_report(rep, m, dir, watch);
        }
        if (rl->parsed()) {
            Stopwatch watch;
            const PeriodicGrid g = rl_c.grid();
            const BumpProfile bump = BumpProfile::make(g, g.dim());
            const ExperimentReport rep =
                rl_lower_bound(rl_lo, rl_hi, rl_c.s, rl_c.p, bump);
            const std::string dir = resolve_out(rl_c.out, "rllimit");
            RunManifest m;
            m.command = "experiment rllimit";
            echo_common(m, rl_c, g);
            m.config.emplace_back("nlo", std::to_string(rl_lo));
            m.config.emplace_back("nhi", std::to_string(rl_hi));
            m.config.emplace_back("out", dir);
            return write_report(rep, m, dir, watch);
        }
    } catch (const BlowupDetected& e) {
        std::cerr << "solver blow-up: " << e.what() << "\n";
        return kExitBlowup;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
