#include "epspectra/littlewood_paley.hpp"

#include "epspectra/spectral_ops.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <stdexcept>

namespace epspectra {

namespace {

// Pushing the plateau edge slightly above 3/4 keeps the counterexample
// annuli strictly inside the phi == 1 zone of their own block.
constexpr double kChiInnerMargin = 0.01;
constexpr double kChiInner = 0.75 * (1.0 + kChiInnerMargin);
constexpr double kChiOuter = 4.0 / 3.0;

template <typename F>
VectorField map_components(const VectorField& u, F&& f) {
    std::vector<ScalarField> comps;
    comps.reserve(std::size_t(u.size()));
    for (int i = 0; i < u.size(); ++i) comps.push_back(f(u[i]));
    return VectorField(std::move(comps));
}

}  // namespace

SpaceParams::SpaceParams(double s_, double p_, double index_, SpaceKind kind_)
    : s(s_), p(p_), index(index_), kind(kind_) {
    if (!(s > 0.0) || !std::isfinite(s))
        throw std::invalid_argument("SpaceParams: regularity s must be positive");
    if (!(p > 1.0) || !std::isfinite(p))
        throw std::invalid_argument("SpaceParams: p must satisfy 1 < p < inf");
    if (!(index > 1.0))
        throw std::invalid_argument("SpaceParams: index must exceed 1");
    if (kind == SpaceKind::TriebelLizorkin && !std::isfinite(index))
        throw std::invalid_argument("SpaceParams: Triebel-Lizorkin index must be finite");
}

SpaceParams SpaceParams::besov(double s_, double p_, double q_) {
    return SpaceParams(s_, p_, q_, SpaceKind::Besov);
}

SpaceParams SpaceParams::triebel_lizorkin(double s_, double p_, double r_) {
    return SpaceParams(s_, p_, r_, SpaceKind::TriebelLizorkin);
}

DyadicPartition DyadicPartition::build(const PeriodicGrid& g) {
    SmoothCutoff chi{kChiInner, kChiOuter};
    std::vector<double> rho(g.total_points());
    std::vector<double> chi_values(g.total_points());
    for_each_mode(g, [&](std::size_t flat, std::span<const int>, std::span<const double> xi) {
        double s = 0.0;
        for (double v : xi) s += v * v;
        rho[flat] = std::sqrt(s);
        chi_values[flat] = chi(rho[flat]);
    });
    // last block whose support {|xi| > inner * 2^j} still meets the lattice
    const double top = g.max_frequency_corner();
    int j_max = -1;
    while (chi.inner * std::ldexp(1.0, j_max + 1) <= top) ++j_max;
    return DyadicPartition(g, chi, j_max, std::move(rho), std::move(chi_values));
}

std::vector<double> DyadicPartition::phi_table(int j) const {
    std::vector<double> t(rho_.size());
    for (std::size_t i = 0; i < rho_.size(); ++i) t[i] = phi_at(j, rho_[i]);
    return t;
}

namespace {

ScalarField apply_profile(const ScalarField& f, const DyadicPartition& part,
                          const std::function<double(double)>& profile) {
    const std::vector<double>& rho = part.radius_table();
    std::vector<std::complex<double>> c = f.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] *= profile(rho[i]);
    return ScalarField::from_coefficients(f.grid(), std::move(c));
}

void check_grid(const ScalarField& f, const DyadicPartition& part, const char* what) {
    if (f.grid() != part.grid())
        throw std::invalid_argument(std::string(what) + ": field grid does not match partition");
}

}  // namespace

ScalarField dyadic_block(const ScalarField& f, int j, const DyadicPartition& part) {
    check_grid(f, part, "dyadic_block");
    if (j <= -2 || j > part.j_max()) return ScalarField::zeros(f.grid());
    if (j == -1) {
        const std::vector<double>& chi = part.chi_table();
        std::vector<std::complex<double>> c = f.coefficients();
        for (std::size_t i = 0; i < c.size(); ++i) c[i] *= chi[i];
        return ScalarField::from_coefficients(f.grid(), std::move(c));
    }
    return apply_profile(f, part, [&](double rho) { return part.phi_at(j, rho); });
}

VectorField dyadic_block(const VectorField& u, int j, const DyadicPartition& part) {
    return map_components(u, [&](const ScalarField& f) { return dyadic_block(f, j, part); });
}

ScalarField low_pass(const ScalarField& f, int cutoff_index, const DyadicPartition& part) {
    check_grid(f, part, "low_pass");
    if (cutoff_index <= -1) return ScalarField::zeros(f.grid());
    if (cutoff_index > part.j_max()) return f;  // every surviving block included
    const std::vector<double>& rho = part.radius_table();
    const std::vector<double>& chi = part.chi_table();
    std::vector<std::complex<double>> c = f.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        double m = chi[i];
        for (int q = 0; q < cutoff_index; ++q) m += part.phi_at(q, rho[i]);
        c[i] *= m;
    }
    return ScalarField::from_coefficients(f.grid(), std::move(c));
}

VectorField low_pass(const VectorField& u, int cutoff_index, const DyadicPartition& part) {
    return map_components(u, [&](const ScalarField& f) { return low_pass(f, cutoff_index, part); });
}

namespace {

double lp_norm_block(const std::vector<const ScalarField*>& comps, double p, double vol) {
    // Euclidean magnitude across components, rectangle rule in space
    const std::size_t total = comps.front()->samples().size();
    double acc = 0.0;
    for (std::size_t i = 0; i < total; ++i) {
        double m = 0.0;
        for (const ScalarField* f : comps) {
            const double v = f->samples()[i];
            m += v * v;
        }
        acc += std::pow(std::sqrt(m), p);
    }
    return std::pow(vol * acc, 1.0 / p);
}

double besov_norm_impl(const std::vector<const ScalarField*>& comps,
                       const SpaceParams& sp, const DyadicPartition& part) {
    if (sp.kind != SpaceKind::Besov)
        throw std::invalid_argument("besov_norm: space kind mismatch");
    const PeriodicGrid& g = comps.front()->grid();
    const double vol = g.cell_volume();
    double acc = 0.0, sup = 0.0;
    for (int j = -1; j <= part.j_max(); ++j) {
        std::vector<ScalarField> blocks;
        blocks.reserve(comps.size());
        for (const ScalarField* f : comps) blocks.push_back(dyadic_block(*f, j, part));
        std::vector<const ScalarField*> views;
        for (const ScalarField& b : blocks) views.push_back(&b);
        const double term = std::pow(2.0, double(j) * sp.s) * lp_norm_block(views, sp.p, vol);
        if (sp.index_is_finite())
            acc += std::pow(term, sp.index);
        else
            sup = std::max(sup, term);
    }
    return sp.index_is_finite() ? std::pow(acc, 1.0 / sp.index) : sup;
}

double tl_seminorm_impl(const std::vector<const ScalarField*>& comps,
                        const SpaceParams& sp, const DyadicPartition& part) {
    if (sp.kind != SpaceKind::TriebelLizorkin)
        throw std::invalid_argument("tl_seminorm: space kind mismatch");
    const PeriodicGrid& g = comps.front()->grid();
    const std::size_t total = g.total_points();
    const double r = sp.index;
    std::vector<double> stack(total, 0.0);
    for (int j = -1; j <= part.j_max(); ++j) {
        std::vector<ScalarField> blocks;
        for (const ScalarField* f : comps) blocks.push_back(dyadic_block(*f, j, part));
        const double w = std::pow(std::pow(2.0, double(j) * sp.s), r);
        for (std::size_t i = 0; i < total; ++i) {
            double m = 0.0;
            for (const ScalarField& b : blocks) {
                const double v = b.samples()[i];
                m += v * v;
            }
            stack[i] += w * std::pow(std::sqrt(m), r);
        }
    }
    const double vol = g.cell_volume();
    double acc = 0.0;
    for (std::size_t i = 0; i < total; ++i) acc += std::pow(std::pow(stack[i], 1.0 / r), sp.p);
    return std::pow(vol * acc, 1.0 / sp.p);
}

}  // namespace

double besov_norm(const ScalarField& f, const SpaceParams& sp, const DyadicPartition& part) {
    check_grid(f, part, "besov_norm");
    return besov_norm_impl({&f}, sp, part);
}

double besov_norm(const VectorField& u, const SpaceParams& sp, const DyadicPartition& part) {
    check_grid(u[0], part, "besov_norm");
    std::vector<const ScalarField*> comps;
    for (int i = 0; i < u.size(); ++i) comps.push_back(&u[i]);
    return besov_norm_impl(comps, sp, part);
}

double tl_seminorm(const ScalarField& f, const SpaceParams& sp, const DyadicPartition& part) {
    check_grid(f, part, "tl_seminorm");
    return tl_seminorm_impl({&f}, sp, part);
}

double tl_seminorm(const VectorField& u, const SpaceParams& sp, const DyadicPartition& part) {
    check_grid(u[0], part, "tl_seminorm");
    std::vector<const ScalarField*> comps;
    for (int i = 0; i < u.size(); ++i) comps.push_back(&u[i]);
    return tl_seminorm_impl(comps, sp, part);
}

double tl_norm(const ScalarField& f, const SpaceParams& sp, const DyadicPartition& part) {
    return lp_norm(f, sp.p) + tl_seminorm(f, sp, part);
}

double tl_norm(const VectorField& u, const SpaceParams& sp, const DyadicPartition& part) {
    return lp_norm(u, sp.p) + tl_seminorm(u, sp, part);
}

EmbeddingReport embedding_check(const ScalarField& f, double s, double p, double r,
                                const DyadicPartition& part) {
    const double b = besov_norm(f, SpaceParams::besov(s, p,
                                std::numeric_limits<double>::infinity()), part);
    const double t = tl_norm(f, SpaceParams::triebel_lizorkin(s, p, r), part);
    return EmbeddingReport{b, t, b <= t * (1.0 + 1e-13)};
}

namespace {

std::vector<BlockNormRow> block_spectrum_impl(const std::vector<const ScalarField*>& comps,
                                              const SpaceParams& sp,
                                              const DyadicPartition& part) {
    const double vol = comps.front()->grid().cell_volume();
    std::vector<BlockNormRow> rows;
    for (int j = -1; j <= part.j_max(); ++j) {
        std::vector<ScalarField> blocks;
        blocks.reserve(comps.size());
        for (const ScalarField* f : comps) blocks.push_back(dyadic_block(*f, j, part));
        std::vector<const ScalarField*> views;
        for (const ScalarField& b : blocks) views.push_back(&b);
        const double lp = lp_norm_block(views, sp.p, vol);
        rows.push_back(BlockNormRow{j, lp, std::pow(2.0, double(j) * sp.s) * lp});
    }
    return rows;
}

}  // namespace

std::vector<BlockNormRow> block_spectrum(const ScalarField& f, const SpaceParams& sp,
                                         const DyadicPartition& part) {
    check_grid(f, part, "block_spectrum");
    return block_spectrum_impl({&f}, sp, part);
}

std::vector<BlockNormRow> block_spectrum(const VectorField& u, const SpaceParams& sp,
                                         const DyadicPartition& part) {
    check_grid(u[0], part, "block_spectrum");
    std::vector<const ScalarField*> comps;
    for (int i = 0; i < u.size(); ++i) comps.push_back(&u[i]);
    return block_spectrum_impl(comps, sp, part);
}

std::string block_spectrum_csv(const std::vector<BlockNormRow>& rows) {
    std::string out = "j,block_lp,weighted\n";
    char buf[96];
    for (const BlockNormRow& r : rows) {
        std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g\n", r.j, r.block_lp, r.weighted);
        out += buf;
    }
    return out;
}

}  // namespace epspectra
