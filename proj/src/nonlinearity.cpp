#include "kglab/nonlinearity.hpp"

#include <cmath>

#include "kglab/spectral.hpp"

namespace kg {

void NonlinearityCoeffs::set_g(int j, int k, int l, double value) {
    g[j][k][l] = value;
    g[k][j][l] = value;
}

void NonlinearityCoeffs::set_h(int j, int k, double value) {
    h[j][k] = value;
    h[k][j] = value;
}

void NonlinearityCoeffs::set_q(int a, int b, double value) {
    q[a][b] = value;
    q[b][a] = value;
}

void NonlinearityCoeffs::validate() const {
    for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k)
            for (int l = 0; l < 4; ++l)
                if (g[j][k][l] != g[k][j][l])
                    throw ContractViolation("coeffs: g must be symmetric in its first two indices");
    for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k)
            if (h[j][k] != h[k][j])
                throw ContractViolation("coeffs: h must be symmetric");
    for (int l = 0; l < 4; ++l)
        if (g[0][0][l] != 0.0)
            throw ContractViolation("coeffs: G^{00} must vanish identically");
    if (h[0][0] != 0.0)
        throw ContractViolation("coeffs: G^{00} must vanish identically");
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            if (q[a][b] != q[b][a])
                throw ContractViolation("coeffs: q must be symmetric");
}

bool NonlinearityCoeffs::all_zero() const {
    for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) {
            if (h[j][k] != 0.0) return false;
            for (int l = 0; l < 4; ++l)
                if (g[j][k][l] != 0.0) return false;
        }
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            if (q[a][b] != 0.0) return false;
    return true;
}

bool NonlinearityCoeffs::has_spatial_g() const {
    for (int j = 1; j < 4; ++j)
        for (int k = 1; k < 4; ++k) {
            if (h[j][k] != 0.0) return true;
            for (int l = 0; l < 4; ++l)
                if (g[j][k][l] != 0.0) return true;
        }
    return false;
}

NonlinearityCoeffs preset_coeffs(const std::string& name) {
    NonlinearityCoeffs c;
    if (name == "zero") {
    } else if (name == "dtu2") {
        c.set_q(1, 1, 1.0);
    } else if (name == "u2") {
        c.set_q(0, 0, 1.0);
    } else if (name == "mixed") {
        c.set_h(1, 1, 1.0);   // G^{11} = u
        c.set_h(2, 2, 1.0);   // G^{22} = u
        c.set_g(3, 3, 1, 1.0); // G^{33} = d_1 u
        c.set_h(0, 1, 0.5);   // G^{01} = u/2, drives the d_1 udot slot
        c.set_q(1, 1, 1.0);   // (d_t u)^2
        c.set_q(0, 4, 0.5);   // u d_y u
        c.set_q(0, 0, 0.5);   // u^2 / 2
    } else {
        throw ContractViolation("unknown nonlinearity preset '" + name + "'");
    }
    c.validate();
    return c;
}

NonlinearityEvaluator::NonlinearityEvaluator(const GridSpec& grid,
                                             const NonlinearityCoeffs& coeffs)
    : grid_(grid), coeffs_(coeffs) {
    grid_.validate();
    coeffs_.validate();
    if (grid_.dealias_fraction > 2.0 / 3.0 + 1e-12)
        throw ContractViolation(
            "nonlinearity: dealias_fraction above 2/3 leaves quadratic products aliased");
    for (int j = 0; j < 4; ++j)
        for (int k = j; k < 4; ++k) {
            bool used = coeffs_.h[j][k] != 0.0;
            for (int l = 0; l < 4; ++l) used = used || coeffs_.g[j][k][l] != 0.0;
            if (!used) continue;
            need_dd_[j][k] = true;
            if (coeffs_.h[j][k] != 0.0) need_u_ = true;
            for (int l = 0; l < 4; ++l)
                if (coeffs_.g[j][k][l] != 0.0) need_d_[l] = true;
        }
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) {
            if (coeffs_.q[a][b] == 0.0) continue;
            if (a == 0 || b == 0) need_u_ = true;
            if (a >= 1) need_d_[a - 1] = true;
            if (b >= 1) need_d_[b - 1] = true;
        }
}

namespace {

// One realized physical field: a derivative string applied to u or udot.
struct Job {
    bool from_udot;
    int a, b; // spatial derivative axes in 1..3, or 0 for none
    std::vector<double> out;
};

void realize_jobs(const GridSpec& g, const Field& u, const Field& udot,
                  std::vector<Job>& jobs) {
    const double du = g.xi_unit();
    for (std::size_t j0 = 0; j0 < jobs.size(); j0 += 2) {
        Job* ja = &jobs[j0];
        Job* jb = j0 + 1 < jobs.size() ? &jobs[j0 + 1] : nullptr;
        std::vector<cplx> buf(g.size());
        for (int i = 0; i < g.nx(); ++i) {
            double x1 = du * g.signed_plane(i);
            for (int j = 0; j < g.nx(); ++j) {
                double x2 = du * g.signed_plane(j);
                std::size_t base = (static_cast<std::size_t>(i) * g.nx() + j) * g.ny();
                for (int q = 0; q < g.ny(); ++q) {
                    double n = g.signed_mode(q);
                    auto zeta = [&](int axis) { return axis == 1 ? x1 : axis == 2 ? x2 : n; };
                    auto symbol = [&](const Job& job) {
                        cplx m(1.0, 0.0);
                        if (job.a) m *= cplx(0.0, zeta(job.a));
                        if (job.b) m *= cplx(0.0, zeta(job.b));
                        return m;
                    };
                    cplx va = symbol(*ja) * (ja->from_udot ? udot : u).coeffs[base + q];
                    cplx v = va;
                    if (jb) v += cplx(0.0, 1.0) * (symbol(*jb) *
                                                   (jb->from_udot ? udot : u).coeffs[base + q]);
                    buf[base + q] = v;
                }
            }
        }
        fft_backward_inplace(g, buf);
        ja->out.resize(buf.size());
        if (jb) jb->out.resize(buf.size());
        for (std::size_t i = 0; i < buf.size(); ++i) {
            ja->out[i] = buf[i].real();
            if (jb) jb->out[i] = buf[i].imag();
        }
    }
}

} // namespace

Field NonlinearityEvaluator::evaluate(const Field& u, const Field& udot) {
    if (!(u.grid == grid_) || !(udot.grid == grid_))
        throw ContractViolation("nonlinearity: state lives on a different grid");

    Field ud = u, vd = udot;
    dealias_inplace(ud);
    dealias_inplace(vd);

    // Field catalogue: index 0 -> u; 1+l -> d_l u; then second derivatives.
    std::vector<Job> jobs;
    int slot_u = -1, slot_d[4] = {-1, -1, -1, -1}, slot_dd[4][4];
    for (auto& row : slot_dd) row[0] = row[1] = row[2] = row[3] = -1;

    auto add_job = [&](bool from_udot, int a, int b) {
        jobs.push_back(Job{from_udot, a, b, {}});
        return static_cast<int>(jobs.size() - 1);
    };
    if (need_u_) slot_u = add_job(false, 0, 0);
    for (int l = 0; l < 4; ++l)
        if (need_d_[l]) slot_d[l] = l == 0 ? add_job(true, 0, 0) : add_job(false, l, 0);
    for (int j = 0; j < 4; ++j)
        for (int k = j; k < 4; ++k)
            if (need_dd_[j][k])
                slot_dd[j][k] = j == 0 ? add_job(true, k, 0) : add_job(false, j, k);

    realize_jobs(grid_, ud, vd, jobs);

    std::vector<double> F(grid_.size(), 0.0);
    auto field_at = [&](int slot) -> const std::vector<double>& { return jobs[slot].out; };
    for (int j = 0; j < 4; ++j)
        for (int k = j; k < 4; ++k) {
            if (!need_dd_[j][k]) continue;
            double fac = j == k ? 1.0 : 2.0;
            const auto& dd = field_at(slot_dd[j][k]);
            for (std::size_t p = 0; p < F.size(); ++p) {
                double G = 0.0;
                if (coeffs_.h[j][k] != 0.0) G += coeffs_.h[j][k] * field_at(slot_u)[p];
                for (int l = 0; l < 4; ++l)
                    if (coeffs_.g[j][k][l] != 0.0)
                        G += coeffs_.g[j][k][l] * field_at(slot_d[l])[p];
                F[p] += fac * G * dd[p];
            }
        }
    for (int a = 0; a < 5; ++a)
        for (int b = a; b < 5; ++b) {
            if (coeffs_.q[a][b] == 0.0) continue;
            double fac = (a == b ? 1.0 : 2.0) * coeffs_.q[a][b];
            const auto& va = field_at(a == 0 ? slot_u : slot_d[a - 1]);
            const auto& vb = field_at(b == 0 ? slot_u : slot_d[b - 1]);
            for (std::size_t p = 0; p < F.size(); ++p) F[p] += fac * va[p] * vb[p];
        }

    std::vector<cplx> buf(F.size());
    for (std::size_t p = 0; p < F.size(); ++p) buf[p] = cplx(F[p], 0.0);
    Field out = forward_transform(grid_, buf);
    dealias_inplace(out);
    return out;
}

Field evaluate_nonlinearity(const Field& u, const Field& udot,
                            const NonlinearityCoeffs& coeffs) {
    NonlinearityEvaluator ev(u.grid, coeffs);
    return ev.evaluate(u, udot);
}

} // namespace kg
