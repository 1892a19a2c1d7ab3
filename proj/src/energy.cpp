#include "kglab/energy.hpp"

#include <cmath>

#include "kglab/norms.hpp"
#include "kglab/spectral.hpp"

namespace kg {

namespace {

// Smallest eigenvalue of a symmetric 3x3 matrix, trigonometric closed form.
double min_eigenvalue_sym3(const double m[3][3]) {
    double p1 = m[0][1] * m[0][1] + m[0][2] * m[0][2] + m[1][2] * m[1][2];
    if (p1 == 0.0) return std::min({m[0][0], m[1][1], m[2][2]});
    double q = (m[0][0] + m[1][1] + m[2][2]) / 3.0;
    double p2 = (m[0][0] - q) * (m[0][0] - q) + (m[1][1] - q) * (m[1][1] - q) +
                (m[2][2] - q) * (m[2][2] - q) + 2.0 * p1;
    double p = std::sqrt(p2 / 6.0);
    double b[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) b[i][j] = (m[i][j] - (i == j ? q : 0.0)) / p;
    double detb = b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) -
                  b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
                  b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
    double r = std::clamp(0.5 * detb, -1.0, 1.0);
    double phi = std::acos(r) / 3.0;
    return q + 2.0 * p * std::cos(phi + 2.0 * pi / 3.0);
}

std::vector<double> realize_real(const Field& f) {
    std::vector<cplx> phys = inverse_transform(f);
    std::vector<double> out(phys.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = phys[i].real();
    return out;
}

} // namespace

EnergyBreakdown modified_energy(const Field& u, const Field& udot,
                                const NonlinearityCoeffs& coeffs, int N) {
    u.require_same_grid(udot, "modified_energy");
    coeffs.validate();
    if (N < 0 || N > 8) throw ContractViolation("modified_energy: order must be in 0..8");
    const GridSpec& g = u.grid;
    EnergyBreakdown out;

    // Flat part, spectrally: weight W(zeta) = sum_{|rho|<=N} zeta^{2 rho}.
    auto rhos = multi_indices(N);
    const double du = g.xi_unit();
    double flat = 0.0;
    for (int i = 0; i < g.nx(); ++i) {
        double x1 = du * g.signed_plane(i);
        for (int j = 0; j < g.nx(); ++j) {
            double x2 = du * g.signed_plane(j);
            std::size_t row = (static_cast<std::size_t>(i) * g.nx() + j) * g.ny();
            for (int q = 0; q < g.ny(); ++q) {
                double n = g.signed_mode(q);
                double pw1[9], pw2[9], pw3[9];
                pw1[0] = pw2[0] = pw3[0] = 1.0;
                for (int a = 1; a <= N; ++a) {
                    pw1[a] = pw1[a - 1] * x1 * x1;
                    pw2[a] = pw2[a - 1] * x2 * x2;
                    pw3[a] = pw3[a - 1] * n * n;
                }
                double w = 0.0;
                for (const auto& rho : rhos) w += pw1[rho[0]] * pw2[rho[1]] * pw3[rho[2]];
                double zeta2 = x1 * x1 + x2 * x2 + n * n;
                flat += w * (std::norm(udot.coeffs[row + q]) +
                             (1.0 + zeta2) * std::norm(u.coeffs[row + q]));
            }
        }
    }
    out.flat = g.volume() * flat;
    out.total = out.flat;
    out.min_quadratic_eigenvalue = 1.0;

    if (!coeffs.has_spatial_g()) return out;

    // Assemble the 3x3 coefficient fields G^{jk}(u, du), j,k = 1..3.
    bool need_u = false, need_d[4] = {};
    for (int j = 1; j < 4; ++j)
        for (int k = 1; k < 4; ++k) {
            if (coeffs.h[j][k] != 0.0) need_u = true;
            for (int l = 0; l < 4; ++l)
                if (coeffs.g[j][k][l] != 0.0) need_d[l] = true;
        }
    std::vector<double> pu, pd[4];
    if (need_u) pu = realize_real(u);
    if (need_d[0]) pd[0] = realize_real(udot);
    for (int l = 1; l < 4; ++l)
        if (need_d[l]) pd[l] = realize_real(derivative(u, l));

    std::size_t npts = g.size();
    std::vector<double> G[3][3];
    for (int j = 1; j < 4; ++j)
        for (int k = j; k < 4; ++k) {
            bool used = coeffs.h[j][k] != 0.0;
            for (int l = 0; l < 4; ++l) used = used || coeffs.g[j][k][l] != 0.0;
            if (!used) continue;
            std::vector<double> val(npts, 0.0);
            if (coeffs.h[j][k] != 0.0)
                for (std::size_t p = 0; p < npts; ++p) val[p] += coeffs.h[j][k] * pu[p];
            for (int l = 0; l < 4; ++l)
                if (coeffs.g[j][k][l] != 0.0)
                    for (std::size_t p = 0; p < npts; ++p)
                        val[p] += coeffs.g[j][k][l] * pd[l][p];
            G[j - 1][k - 1] = std::move(val);
        }

    // Positivity of I + G at every grid point.
    double min_eig = 1.0;
    for (std::size_t p = 0; p < npts; ++p) {
        double m[3][3];
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
                const auto& vec = a <= b ? G[a][b] : G[b][a];
                m[a][b] = (a == b ? 1.0 : 0.0) + (vec.empty() ? 0.0 : vec[p]);
            }
        min_eig = std::min(min_eig, min_eigenvalue_sym3(m));
    }
    out.min_quadratic_eigenvalue = min_eig;
    if (min_eig <= 0.0)
        throw NumericalFailure(
            "modified_energy: corrected quadratic form is indefinite (min eigenvalue " +
            std::to_string(min_eig) + ")");

    // Correction sum over rho.
    double corr = 0.0;
    for (const auto& rho : rhos) {
        Field base = u;
        for (int a = 0; a < rho[0]; ++a) base = derivative(base, 1);
        for (int a = 0; a < rho[1]; ++a) base = derivative(base, 2);
        for (int a = 0; a < rho[2]; ++a) base = derivative(base, 3);
        std::vector<double> dj[3];
        for (int j = 1; j <= 3; ++j) dj[j - 1] = realize_real(derivative(base, j));
        double local = 0.0;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
                const auto& vec = a <= b ? G[a][b] : G[b][a];
                if (vec.empty()) continue;
                for (std::size_t p = 0; p < npts; ++p)
                    local += vec[p] * dj[a][p] * dj[b][p];
            }
        corr += local;
    }
    out.correction = corr * g.cell_volume();
    out.total = out.flat + out.correction;
    return out;
}

} // namespace kg
