#include "kglab/phase.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "kglab/data.hpp"

namespace kg {

namespace {

double lam(double z1, double z2, double n) {
    return std::sqrt(1.0 + z1 * z1 + z2 * z2 + n * n);
}

void require_signs(const PhaseQuery& q) {
    if ((q.mu != 1 && q.mu != -1) || (q.nu != 1 && q.nu != -1))
        throw ContractViolation("phase: mu and nu must be +1 or -1");
}

// Plane Hessian of Lam_n at z: H_ab = delta_ab / Lam - z_a z_b / Lam^3.
std::array<double, 3> lam_hessian(double z1, double z2, double n) {
    double L = lam(z1, z2, n);
    double L3 = L * L * L;
    return {1.0 / L - z1 * z1 / L3, -z1 * z2 / L3, 1.0 / L - z2 * z2 / L3};
}

} // namespace

double phase(const PhaseQuery& q) {
    require_signs(q);
    double d1 = q.xi1 - q.eta1, d2 = q.xi2 - q.eta2;
    return lam(q.xi1, q.xi2, q.n) - q.mu * lam(d1, d2, q.n - q.m) -
           q.nu * lam(q.eta1, q.eta2, q.m);
}

std::array<double, 4> phase_gradient(const PhaseQuery& q) {
    require_signs(q);
    double d1 = q.xi1 - q.eta1, d2 = q.xi2 - q.eta2;
    double La = lam(q.xi1, q.xi2, q.n);
    double Lb = lam(d1, d2, q.n - q.m);
    double Lc = lam(q.eta1, q.eta2, q.m);
    return {q.xi1 / La - q.mu * d1 / Lb, q.xi2 / La - q.mu * d2 / Lb,
            q.mu * d1 / Lb - q.nu * q.eta1 / Lc,
            q.mu * d2 / Lb - q.nu * q.eta2 / Lc};
}

std::array<std::array<double, 4>, 4> phase_hessian(const PhaseQuery& q) {
    require_signs(q);
    double d1 = q.xi1 - q.eta1, d2 = q.xi2 - q.eta2;
    auto Ha = lam_hessian(q.xi1, q.xi2, q.n);
    auto Hb = lam_hessian(d1, d2, q.n - q.m);
    auto Hc = lam_hessian(q.eta1, q.eta2, q.m);
    double mu = q.mu, nu = q.nu;
    std::array<std::array<double, 4>, 4> H{};
    // xi-xi block: Ha - mu Hb; xi-eta and eta-xi: +mu Hb; eta-eta: -mu Hb - nu Hc.
    H[0][0] = Ha[0] - mu * Hb[0];
    H[0][1] = H[1][0] = Ha[1] - mu * Hb[1];
    H[1][1] = Ha[2] - mu * Hb[2];
    H[0][2] = H[2][0] = mu * Hb[0];
    H[0][3] = H[3][0] = H[1][2] = H[2][1] = mu * Hb[1];
    H[1][3] = H[3][1] = mu * Hb[2];
    H[2][2] = -mu * Hb[0] - nu * Hc[0];
    H[2][3] = H[3][2] = -mu * Hb[1] - nu * Hc[1];
    H[3][3] = -mu * Hb[2] - nu * Hc[2];
    return H;
}

double phase_lower_bound(const PhaseQuery& q) {
    double d1 = q.xi1 - q.eta1, d2 = q.xi2 - q.eta2;
    double a = q.xi1 * q.xi1 + q.xi2 * q.xi2 + double(q.n) * q.n;
    double b = d1 * d1 + d2 * d2 + double(q.n - q.m) * (q.n - q.m);
    double c = q.eta1 * q.eta1 + q.eta2 * q.eta2 + double(q.m) * q.m;
    return 0.5 / std::sqrt(1.0 + std::min({a, b, c}));
}

PhaseSweepReport verify_phase_bounds(long long sample_count, std::uint64_t seed) {
    if (sample_count <= 0)
        throw ContractViolation("verify_phase_bounds: sample_count must be positive");
    Rng rng(seed);
    PhaseSweepReport rep;
    rep.min_margin = std::numeric_limits<double>::infinity();

    long long draws = (sample_count + 3) / 4;
    for (long long it = 0; it < draws; ++it) {
        PhaseQuery q;
        double scale = std::exp(rng.uniform() * std::log(1200.0)) * 0.25;
        q.xi1 = scale * rng.gaussian();
        q.xi2 = scale * rng.gaussian();
        switch (rng.integer(0, 2)) {
        case 0: // independent
            q.eta1 = scale * rng.gaussian();
            q.eta2 = scale * rng.gaussian();
            break;
        case 1: { // near-collinear
            double t = 3.0 * rng.uniform() - 1.5;
            q.eta1 = t * q.xi1 + 0.01 * rng.gaussian();
            q.eta2 = t * q.xi2 + 0.01 * rng.gaussian();
            break;
        }
        default: // near the equal-split ray, where the bound is tightest
            q.eta1 = 0.5 * q.xi1 + 0.01 * rng.gaussian();
            q.eta2 = 0.5 * q.xi2 + 0.01 * rng.gaussian();
            break;
        }
        int mode_span = rng.integer(0, 1) == 0 ? 4 : 40;
        q.n = rng.integer(-mode_span, mode_span);
        q.m = rng.integer(-mode_span, mode_span);

        double bound = phase_lower_bound(q);
        for (int mu : {1, -1})
            for (int nu : {1, -1}) {
                q.mu = mu;
                q.nu = nu;
                double p = phase(q);
                double margin = std::abs(p) / bound;
                ++rep.samples;
                if (margin < rep.min_margin) {
                    rep.min_margin = margin;
                    rep.worst = q;
                }
                if (margin < 1.0 - 1e-9) ++rep.violations;

                auto g = phase_gradient(q);
                double gn = std::sqrt(g[0] * g[0] + g[1] * g[1] + g[2] * g[2] +
                                      g[3] * g[3]);
                double ratio = gn / std::abs(p);
                rep.sup_grad_ratio = std::max(rep.sup_grad_ratio, ratio);
                rep.sup_inv_first = std::max(rep.sup_inv_first, ratio);
                auto H = phase_hessian(q);
                for (int a = 0; a < 4; ++a)
                    for (int b = 0; b < 4; ++b) {
                        // |d^2_ab (1/Phi)| * |Phi| with
                        // d^2_ab (1/Phi) = 2 g_a g_b / Phi^3 - H_ab / Phi^2
                        double v =
                            std::abs(2.0 * g[a] * g[b] / (p * p) - H[a][b] / p);
                        rep.sup_inv_second = std::max(rep.sup_inv_second, v);
                    }
            }
    }

    if (rep.violations > 0) {
        std::ostringstream os;
        os << "phase lower bound violated: margin " << rep.min_margin
           << " at xi=(" << rep.worst.xi1 << "," << rep.worst.xi2 << ") eta=("
           << rep.worst.eta1 << "," << rep.worst.eta2 << ") n=" << rep.worst.n
           << " m=" << rep.worst.m << " mu=" << rep.worst.mu
           << " nu=" << rep.worst.nu;
        throw NumericalFailure(os.str());
    }
    return rep;
}

} // namespace kg
