#include "kglab/dispersive.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "kglab/data.hpp"
#include "kglab/errors.hpp"
#include "kglab/grid.hpp"
#include "kglab/transform.hpp"

namespace kg {

namespace {

// Plane box and resolution shared by every sample.  The data band stays below
// |xi| = 4, so at t = 100 the fastest front plus the initial envelope reaches
// about 107 < L/2, and |field|^2 oscillates slower than ~7 rad per unit,
// which dx = 0.35 resolves at 2.5+ samples per period (a parabola fit picks
// up the remainder).
constexpr double box_side = 224.0;
constexpr int grid_nx = 640;
constexpr double sigma = 0.6;
constexpr int mode_top = 6;
constexpr int y_points = 128;

struct PlaneGrid {
    int nx;
    double L;
    double dx() const { return L / nx; }
    double xi_unit() const { return 2.0 * pi / L; }
    int signed_index(int i) const { return i <= nx / 2 ? i : i - nx; }
    std::size_t size() const { return static_cast<std::size_t>(nx) * nx; }
};

// G^(xi): two unit-amplitude Gaussians, one anchored near the origin so every
// sample has low-frequency content, one anywhere in the band.
struct ClusterShape {
    double c1x, c1y, c2x, c2y;
    cplx a1, a2;

    cplx eval(double x1, double x2) const {
        double q1 = ((x1 - c1x) * (x1 - c1x) + (x2 - c1y) * (x2 - c1y));
        double q2 = ((x1 - c2x) * (x1 - c2x) + (x2 - c2y) * (x2 - c2y));
        double inv = 0.5 / (sigma * sigma);
        return a1 * std::exp(-q1 * inv) + a2 * std::exp(-q2 * inv);
    }
};

ClusterShape draw_cluster(Rng& rng) {
    ClusterShape s;
    double r1 = rng.uniform(0.1, 0.6), t1 = rng.uniform(0.0, 2.0 * pi);
    double r2 = rng.uniform(0.6, 1.5), t2 = rng.uniform(0.0, 2.0 * pi);
    s.c1x = r1 * std::cos(t1);
    s.c1y = r1 * std::sin(t1);
    s.c2x = r2 * std::cos(t2);
    s.c2y = r2 * std::sin(t2);
    s.a1 = std::polar(1.0, rng.uniform(0.0, 2.0 * pi));
    s.a2 = std::polar(1.0, rng.uniform(0.0, 2.0 * pi));
    return s;
}

// sup over the grid and the circle of |sum_a w_a h_a(x) e^{i n_a y}|,
// exact-pruned by the envelope sum B(x) = sum_a |w_a| |h_a(x)| >= sup_y |f|,
// then refined by one parabola fit per axis.
double field_sup(const PlaneGrid& pg, const std::vector<const std::vector<cplx>*>& h,
                 const std::vector<int>& modes, const std::vector<double>& weights) {
    const std::size_t npts = pg.size();
    const int m = static_cast<int>(modes.size());

    std::vector<cplx> phase_table(static_cast<std::size_t>(m) * y_points);
    for (int a = 0; a < m; ++a)
        for (int q = 0; q < y_points; ++q)
            phase_table[static_cast<std::size_t>(a) * y_points + q] =
                weights[a] * std::polar(1.0, modes[a] * (2.0 * pi * q / y_points));

    auto value_at = [&](std::size_t p, int q) {
        cplx acc(0.0, 0.0);
        for (int a = 0; a < m; ++a)
            acc += (*h[a])[p] * phase_table[static_cast<std::size_t>(a) * y_points + q];
        return std::abs(acc);
    };

    std::vector<double> envelope(npts, 0.0);
    for (int a = 0; a < m; ++a) {
        const auto& ha = *h[a];
        for (std::size_t p = 0; p < npts; ++p)
            envelope[p] += weights[a] * std::abs(ha[p]);
    }

    // A cheap lower bound from four circle phases seeds the pruning.
    double best = 0.0;
    std::size_t best_p = 0;
    int best_q = 0;
    for (int q = 0; q < y_points; q += y_points / 4)
        for (std::size_t p = 0; p < npts; ++p) {
            double v = value_at(p, q);
            if (v > best) { best = v; best_p = p; best_q = q; }
        }

    if (m > 1) {
        for (std::size_t p = 0; p < npts; ++p) {
            if (envelope[p] <= best) continue;
            for (int q = 0; q < y_points; ++q) {
                double v = value_at(p, q);
                if (v > best) { best = v; best_p = p; best_q = q; }
            }
        }
    }

    auto parabola = [](double vm, double v0, double vp) {
        double denom = vm - 2.0 * v0 + vp;
        if (denom >= 0.0) return v0;
        double delta = 0.5 * (vm - vp) / denom;
        if (std::abs(delta) > 0.75) return v0;
        return v0 - 0.25 * (vm - vp) * delta;
    };
    int i = static_cast<int>(best_p) / pg.nx, j = static_cast<int>(best_p) % pg.nx;
    auto at_cell = [&](int ii, int jj) {
        ii = (ii % pg.nx + pg.nx) % pg.nx;
        jj = (jj % pg.nx + pg.nx) % pg.nx;
        return value_at(static_cast<std::size_t>(ii) * pg.nx + jj, best_q);
    };
    double refined = best;
    refined = std::max(refined, parabola(at_cell(i - 1, j), best, at_cell(i + 1, j)));
    refined = std::max(refined, parabola(at_cell(i, j - 1), best, at_cell(i, j + 1)));
    refined = std::max(refined,
                       parabola(value_at(best_p, (best_q + y_points - 1) % y_points),
                                best,
                                value_at(best_p, (best_q + 1) % y_points)));
    return refined;
}

} // namespace

DispersiveCertification certify_dispersive_composite(int g_count,
                                                     const std::vector<double>& times,
                                                     std::uint64_t seed,
                                                     double spread_budget,
                                                     const CutoffFamily& cut) {
    if (g_count < 2) throw ContractViolation("dispersive: need at least two samples");
    if (times.empty()) throw ContractViolation("dispersive: empty time list");
    for (double t : times)
        if (!(t >= 0.0) || t > 100.0)
            throw ContractViolation("dispersive: times must lie in [0, 100]");

    PlaneGrid pg{grid_nx, box_side};
    const std::size_t npts = pg.size();

    // R_{[-1,k]} is identically 1 on the data band once 1.25 * 2^k exceeds
    // the band, so filters saturate at this index and larger k reuse it.
    const int k_sat = 2;

    Rng rng(seed);
    DispersiveCertification cert;

    for (int gi = 0; gi < g_count; ++gi) {
        ClusterShape shape = draw_cluster(rng);

        std::vector<int> modes{0};
        while (modes.size() < 4) {
            int n = rng.integer(-mode_top, mode_top);
            if (n != 0 && std::find(modes.begin(), modes.end(), n) == modes.end())
                modes.push_back(n);
        }
        std::vector<cplx> wts;
        for (std::size_t a = 0; a < modes.size(); ++a)
            wts.push_back(std::polar(1.0, rng.uniform(0.0, 2.0 * pi)));
        const int m = static_cast<int>(modes.size());

        std::vector<cplx> ghat(npts);
        for (int i = 0; i < pg.nx; ++i) {
            double x1 = pg.xi_unit() * pg.signed_index(i);
            for (int j = 0; j < pg.nx; ++j) {
                double x2 = pg.xi_unit() * pg.signed_index(j);
                ghat[static_cast<std::size_t>(i) * pg.nx + j] = shape.eval(x1, x2);
            }
        }

        // ||g||_1 = ||G||_{L1(R^2)} ||p||_{L1(T)} for the separable sample.
        std::vector<cplx> gphys = ghat;
        fft2_backward_inplace(pg.nx, gphys);
        double l1_plane = 0.0;
        for (const cplx& v : gphys) l1_plane += std::abs(v);
        l1_plane *= pg.dx() * pg.dx();
        gphys.clear();
        gphys.shrink_to_fit();

        double l1_circle = 0.0;
        const int yq = 4096;
        for (int q = 0; q < yq; ++q) {
            cplx acc(0.0, 0.0);
            for (int a = 0; a < m; ++a)
                acc += wts[a] * std::polar(1.0, modes[a] * (2.0 * pi * q / yq));
            l1_circle += std::abs(acc);
        }
        l1_circle *= 2.0 * pi / yq;
        double l1 = l1_plane * l1_circle;
        if (!(l1 > 0.0) || !std::isfinite(l1))
            throw NumericalFailure("dispersive: degenerate L1 norm of drawn sample");

        double g_constant = 0.0;
        for (double t : times) {
            // filtered propagated fields, one per (saturating filter, mode)
            std::vector<std::vector<std::vector<cplx>>> u(k_sat + 2);
            for (int kf = -1; kf <= k_sat; ++kf) {
                u[kf + 1].assign(m, std::vector<cplx>(npts));
                for (int a = 0; a < m; ++a) {
                    const double n2 = static_cast<double>(modes[a]) * modes[a];
                    auto& dst = u[kf + 1][a];
                    for (int i = 0; i < pg.nx; ++i) {
                        double x1 = pg.xi_unit() * pg.signed_index(i);
                        for (int j = 0; j < pg.nx; ++j) {
                            double x2 = pg.xi_unit() * pg.signed_index(j);
                            std::size_t p = static_cast<std::size_t>(i) * pg.nx + j;
                            double r = std::sqrt(x1 * x1 + x2 * x2);
                            double filt = cut.ring_interval(-1, kf, r);
                            if (filt == 0.0) {
                                dst[p] = cplx(0.0, 0.0);
                                continue;
                            }
                            double lam = std::sqrt(1.0 + x1 * x1 + x2 * x2 + n2);
                            dst[p] = ghat[p] * wts[a] * filt * std::polar(1.0, t * lam);
                        }
                    }
                    fft2_backward_inplace(pg.nx, dst);
                }
            }

            for (int l = -1; l <= 3; ++l) {
                std::vector<int> sub_modes;
                std::vector<int> sub_index;
                std::vector<double> sub_weights;
                for (int a = 0; a < m; ++a) {
                    double w = cut.ring(l, std::abs(static_cast<double>(modes[a])));
                    if (w > 0.0) {
                        sub_modes.push_back(modes[a]);
                        sub_index.push_back(a);
                        sub_weights.push_back(w);
                    }
                }
                if (sub_modes.empty()) continue; // S_l g vanishes

                for (int k = -1; k <= 3; ++k) {
                    int kf = std::min(k, k_sat);
                    std::vector<const std::vector<cplx>*> h;
                    for (int a : sub_index) h.push_back(&u[kf + 1][a]);

                    DispersiveProbe probe;
                    probe.g_index = gi;
                    probe.k = k;
                    probe.l = l;
                    probe.t = t;
                    probe.sup = field_sup(pg, h, sub_modes, sub_weights);
                    probe.l1 = l1;
                    probe.ratio = probe.sup * (1.0 + t) /
                                  (std::ldexp(1.0, 2 * (k + l)) * l1);
                    if (!std::isfinite(probe.ratio))
                        throw CertificationFailure("dispersive: non-finite ratio");
                    cert.probes.push_back(probe);
                    cert.max_ratio = std::max(cert.max_ratio, probe.ratio);
                    g_constant = std::max(g_constant, probe.ratio);
                }
            }
        }
        cert.g_constants.push_back(g_constant);
    }

    double lo = cert.g_constants[0], hi = cert.g_constants[0];
    for (double c : cert.g_constants) {
        lo = std::min(lo, c);
        hi = std::max(hi, c);
    }
    if (!(lo > 0.0))
        throw CertificationFailure("dispersive: a sample produced no usable ratio");
    cert.constant_spread = hi / lo;
    if (!(cert.constant_spread <= spread_budget)) {
        std::ostringstream os;
        os << "dispersive: per-sample constants disagree by "
           << cert.constant_spread << "x (budget " << spread_budget << ")";
        throw CertificationFailure(os.str());
    }
    return cert;
}

} // namespace kg
