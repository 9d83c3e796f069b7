#include "epspectra/ep_dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "epspectra/spectral_ops.hpp"

namespace epspectra {

namespace {

using FieldMatrix = std::vector<std::vector<ScalarField>>;

void check_pair(const VectorField& u, const VectorField& v, const char* what) {
    if (u.grid() != v.grid() || u.size() != v.size())
        throw std::invalid_argument(std::string(what) + ": operand grids differ");
}

std::vector<double> zero_samples(const PeriodicGrid& g) {
    return std::vector<double>(g.total_points(), 0.0);
}

}  // namespace

VectorField q_op(const VectorField& u, const VectorField& v, double fraction) {
    check_pair(u, v, "q_op");
    const PeriodicGrid& g = u.grid();
    const int d = u.size();
    const std::size_t total = g.total_points();

    const VectorField ud = dealias(u, fraction);
    const VectorField vd = dealias(v, fraction);
    const FieldMatrix gu = jacobian(ud);  // gu[i][j] = d_j u_i
    const FieldMatrix gv = jacobian(vd);

    std::vector<double> divu = zero_samples(g);
    for (int i = 0; i < d; ++i)
        for (std::size_t m = 0; m < total; ++m) divu[m] += gu[std::size_t(i)][std::size_t(i)].samples()[m];

    std::vector<double> frob = zero_samples(g);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (std::size_t m = 0; m < total; ++m)
                frob[m] += gu[std::size_t(i)][std::size_t(j)].samples()[m] *
                           gv[std::size_t(i)][std::size_t(j)].samples()[m];

    // T_ij = (G_u G_v)_ij + (G_u G_v^T)_ij - (G_u^T G_v)_ij - divu * (G_v)_ij
    //        + (1/2) delta_ij (G_u : G_v)
    std::vector<ScalarField> out;
    out.reserve(std::size_t(d));
    std::vector<std::vector<ScalarField>> t;
    t.reserve(std::size_t(d));
    for (int i = 0; i < d; ++i) {
        std::vector<ScalarField> row;
        row.reserve(std::size_t(d));
        for (int j = 0; j < d; ++j) {
            std::vector<double> s = zero_samples(g);
            for (int k = 0; k < d; ++k) {
                const std::vector<double>& a = gu[std::size_t(i)][std::size_t(k)].samples();
                const std::vector<double>& b1 = gv[std::size_t(k)][std::size_t(j)].samples();
                const std::vector<double>& b2 = gv[std::size_t(j)][std::size_t(k)].samples();
                const std::vector<double>& a2 = gu[std::size_t(k)][std::size_t(i)].samples();
                for (std::size_t m = 0; m < total; ++m)
                    s[m] += a[m] * b1[m] + a[m] * b2[m] - a2[m] * b1[m];
            }
            const std::vector<double>& gvij = gv[std::size_t(i)][std::size_t(j)].samples();
            for (std::size_t m = 0; m < total; ++m) s[m] -= divu[m] * gvij[m];
            if (i == j)
                for (std::size_t m = 0; m < total; ++m) s[m] += 0.5 * frob[m];
            row.push_back(dealias(ScalarField::from_samples(g, std::move(s)), fraction));
        }
        t.push_back(std::move(row));
    }

    // (div T)_j = sum_i d_i T_ji, contracting the second slot of T
    for (int j = 0; j < d; ++j) {
        ScalarField div_row = spectral_derivative(t[std::size_t(j)][0], 0);
        for (int i = 1; i < d; ++i)
            div_row = div_row + spectral_derivative(t[std::size_t(j)][std::size_t(i)], i);
        out.push_back(-helmholtz_inverse(div_row));
    }
    return VectorField(std::move(out));
}

VectorField r_op(const VectorField& u, const VectorField& v, double fraction) {
    check_pair(u, v, "r_op");
    const PeriodicGrid& g = u.grid();
    const int d = u.size();
    const std::size_t total = g.total_points();

    const VectorField ud = dealias(u, fraction);
    const VectorField vd = dealias(v, fraction);
    const FieldMatrix gu = jacobian(ud);  // gu[i][j] = d_j u_i

    std::vector<double> divu = zero_samples(g);
    for (int i = 0; i < d; ++i)
        for (std::size_t m = 0; m < total; ++m) divu[m] += gu[std::size_t(i)][std::size_t(i)].samples()[m];

    std::vector<ScalarField> out;
    out.reserve(std::size_t(d));
    for (int i = 0; i < d; ++i) {
        std::vector<double> s = zero_samples(g);
        for (std::size_t m = 0; m < total; ++m) s[m] = divu[m] * vd[i].samples()[m];
        for (int j = 0; j < d; ++j) {
            // (G_u . v)_i sums d_i u_j v_j, the [j][i] jacobian entry
            const std::vector<double>& a = gu[std::size_t(j)][std::size_t(i)].samples();
            const std::vector<double>& b = vd[j].samples();
            for (std::size_t m = 0; m < total; ++m) s[m] += a[m] * b[m];
        }
        ScalarField f = dealias(ScalarField::from_samples(g, std::move(s)), fraction);
        out.push_back(-helmholtz_inverse(f));
    }
    return VectorField(std::move(out));
}

VectorField p_op(const VectorField& u, double fraction) {
    return q_op(u, u, fraction) + r_op(u, u, fraction);
}

VectorField convect(const VectorField& a, const VectorField& w, double fraction) {
    check_pair(a, w, "convect");
    const PeriodicGrid& g = a.grid();
    const int d = a.size();
    const std::size_t total = g.total_points();
    const VectorField ad = dealias(a, fraction);
    const VectorField wd = dealias(w, fraction);
    std::vector<ScalarField> out;
    out.reserve(std::size_t(d));
    for (int i = 0; i < d; ++i) {
        std::vector<double> s = zero_samples(g);
        for (int k = 0; k < d; ++k) {
            const ScalarField dw = spectral_derivative(wd[i], k);
            const std::vector<double>& av = ad[k].samples();
            for (std::size_t m = 0; m < total; ++m) s[m] += av[m] * dw.samples()[m];
        }
        out.push_back(dealias(ScalarField::from_samples(g, std::move(s)), fraction));
    }
    return VectorField(std::move(out));
}

VectorField ep_rhs(const VectorField& u, double fraction) {
    return p_op(u, fraction) - convect(u, u, fraction);
}

VectorField u0_functional(const VectorField& u, double fraction) {
    return -ep_rhs(u, fraction);
}

double momentum_residual(const VectorField& u, const VectorField& u_t) {
    check_pair(u, u_t, "momentum_residual");
    const PeriodicGrid& g = u.grid();
    const int d = u.size();
    const std::size_t total = g.total_points();
    const VectorField m = helmholtz_forward(u);
    const VectorField mt = helmholtz_forward(u_t);
    const FieldMatrix gm = jacobian(m);   // gm[i][j] = d_j m_i
    const FieldMatrix gu = jacobian(u);   // gu[i][j] = d_j u_i
    std::vector<double> divu = zero_samples(g);
    for (int j = 0; j < d; ++j)
        for (std::size_t x = 0; x < total; ++x) divu[x] += gu[std::size_t(j)][std::size_t(j)].samples()[x];
    double acc = 0.0;
    for (int i = 0; i < d; ++i) {
        std::vector<double> r(mt[i].samples());
        for (int j = 0; j < d; ++j) {
            const std::vector<double>& uj = u[j].samples();
            const std::vector<double>& dmi = gm[std::size_t(i)][std::size_t(j)].samples();
            // (G_u . m)_i needs d_i u_j, i.e. jacobian entry [j][i]
            const std::vector<double>& duj = gu[std::size_t(j)][std::size_t(i)].samples();
            const std::vector<double>& mj = m[j].samples();
            for (std::size_t x = 0; x < total; ++x) r[x] += uj[x] * dmi[x] + duj[x] * mj[x];
        }
        const std::vector<double>& mi = m[i].samples();
        for (std::size_t x = 0; x < total; ++x) {
            r[x] += divu[x] * mi[x];
            acc += r[x] * r[x];
        }
    }
    return std::sqrt(g.cell_volume() * acc);
}

}  // namespace epspectra
