#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "kglab/data.hpp"
#include "kglab/decay_fit.hpp"
#include "kglab/energy.hpp"
#include "kglab/norms.hpp"
#include "kglab/projections.hpp"
#include "kglab/spectral.hpp"

using namespace kg;

namespace {

GridSpec small_grid() {
    GridSpec g;
    g.box_period = 16.0 * pi;
    g.plane_points = 32;
    g.mode_cutoff = 3;
    return g;
}

// Brute-force recomputation of the weighted atom norm, sharing only the bump
// family and the transforms with the production path.
struct ZOracle {
    double value = 0.0;
    int k = -1, l = -1;
};

ZOracle z_oracle(const Field& f, bool localized, int J) {
    CutoffFamily cut;
    const GridSpec& g = f.grid;
    ZOracle best;
    for (int k = -1; k <= max_plane_shell(g); ++k)
        for (int l = -1; l <= max_mode_shell(g); ++l) {
            Field piece = apply_multiplier(f, [&](double x1, double x2, double n) {
                return cut.ring(k, std::hypot(x1, x2)) * cut.ring(l, n);
            });
            double l2 = l2_norm(piece);
            if (l2 == 0.0) continue;
            std::vector<cplx> phys = inverse_transform(piece);
            double bracket = l2;
            for (int j = 1; j <= max_space_shell(g); ++j) {
                double acc = 0.0;
                for (int i = 0; i < g.nx(); ++i)
                    for (int jj = 0; jj < g.nx(); ++jj) {
                        double w = cut.shell(j, std::hypot(g.coord(i), g.coord(jj)));
                        if (w == 0.0) continue;
                        for (int q = 0; q < g.ny(); ++q)
                            acc += w * w * std::norm(phys[g.at(i, jj, q)]);
                    }
                double weight = localized ? std::ldexp(1.0, std::min(j, 2 * J - j))
                                          : std::ldexp(1.0, j);
                bracket += weight * std::sqrt(acc * g.cell_volume());
            }
            double v = std::ldexp(bracket, 9 * (k + l));
            if (v > best.value) {
                best.value = v;
                best.k = k;
                best.l = l;
            }
        }
    return best;
}

} // namespace

TEST_CASE("sobolev norm matches the symbol on pure modes and L2 at s=0") {
    GridSpec g = small_grid();
    Field f(g);
    int si = 4, sj = -3, n = 2;
    f.coeffs[g.at(g.plane_index(si), g.plane_index(sj), g.mode_index(n))] = cplx(2.0, 0.0);
    double xi1 = si * g.xi_unit(), xi2 = sj * g.xi_unit();
    double lam2 = 1.0 + xi1 * xi1 + xi2 * xi2 + 4.0;
    double expect = std::sqrt(g.volume()) * 2.0 * std::pow(lam2, 1.5 / 2.0);
    CHECK(sobolev_norm(f, 1.5) == doctest::Approx(expect).epsilon(1e-12));

    Field r = random_band_field(g, 51, 0.8, false);
    CHECK(sobolev_norm(r, 0.0) == doctest::Approx(l2_norm(r)).epsilon(1e-12));
    CHECK(sobolev_norm(r, 2.0) >= sobolev_norm(r, 1.0));
}

TEST_CASE("l1 norm of a constant field is volume times amplitude") {
    GridSpec g = small_grid();
    Field f(g);
    f.coeffs[g.at(0, 0, 0)] = cplx(0.75, 0.0);
    CHECK(l1_norm(f) == doctest::Approx(0.75 * g.volume()).epsilon(1e-12));
}

TEST_CASE("weighted atom norm equals the brute-force oracle") {
    GridSpec g = small_grid();
    for (std::uint64_t seed : {60u, 61u, 62u}) {
        Field f = random_band_field(g, seed, 0.9, true);
        ZNormResult got = z_norm(f);
        ZOracle want = z_oracle(f, false, 0);
        CHECK(got.value == doctest::Approx(want.value).epsilon(1e-12));
        CHECK(got.arg_k == want.k);
        CHECK(got.arg_l == want.l);
    }
}

TEST_CASE("localized atom norm matches oracle, bounds, and limits") {
    GridSpec g = small_grid();
    Field f = random_band_field(g, 63, 0.9, true);
    double full = z_norm(f).value;
    double prev = 0.0;
    for (int J = 1; J <= 6; ++J) {
        ZNormResult got = z_j_norm(f, J);
        ZOracle want = z_oracle(f, true, J);
        CHECK(got.value == doctest::Approx(want.value).epsilon(1e-12));
        CHECK(got.value <= full * (1.0 + 1e-12));
        CHECK(got.value >= prev * (1.0 - 1e-12));
        prev = got.value;
    }
    int jmax = max_space_shell(g);
    CHECK(z_j_norm(f, jmax).value == doctest::Approx(full).epsilon(1e-12));
    CHECK_THROWS_AS(z_j_norm(f, 0), ContractViolation);
}

TEST_CASE("atom norm of a low-ball-supported field sits in the corner shell") {
    GridSpec g = small_grid();
    // Spectrum inside the plateau of the (-1,-1) shell: |xi| < 5/8, n = 0.
    Field f(g);
    Rng rng(64);
    for (int si = -1; si <= 1; ++si)
        for (int sj = -1; sj <= 1; ++sj)
            f.coeffs[g.at(g.plane_index(si), g.plane_index(sj), g.mode_index(0))] =
                rng.cgauss();
    f = hermitian_part(f);
    f *= cplx(1.0 / l2_norm(f), 0.0);
    ZNormResult got = z_norm(f);
    CHECK(got.arg_k == -1);
    CHECK(got.arg_l == -1);
    CHECK(got.value >= std::ldexp(1.0, -18) * (1.0 - 1e-12));
    // Exactly one shell contributes; its bracket is l2 + spatial tail sum.
    REQUIRE(got.table.size() == 1);
    CHECK(got.table[0].l2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(got.value == doctest::Approx(std::ldexp(got.table[0].weighted, -18)).epsilon(1e-12));
}

TEST_CASE("projected pieces obey the L1 consequence of the atom norm") {
    GridSpec g = small_grid();
    double cap = std::sqrt(g.volume());
    for (std::uint64_t seed : {71u, 72u}) {
        Field f = random_band_field(g, seed, 0.9, true);
        double z = z_norm(f).value;
        double worst = 0.0;
        for (int k = -1; k <= max_plane_shell(g); ++k)
            for (int l = -1; l <= max_mode_shell(g); ++l) {
                Field piece = project_frequency(f, k, l);
                double l1 = l1_norm(piece);
                if (l1 == 0.0) continue;
                double ratio = l1 * std::ldexp(1.0, 9 * (k + l)) / z;
                worst = std::max(worst, ratio);
                CHECK(ratio <= cap * (1.0 + 1e-9));
            }
        MESSAGE("worst L1/Z ratio: ", worst, " cap ", cap);
    }
}

TEST_CASE("dispersive sum matches an unpacked recomputation") {
    GridSpec g = small_grid();
    Field u = random_band_field(g, 81, 0.7, true);
    Field v = random_band_field(g, 82, 0.7, true);
    double got = dispersive_sum(u, v);
    double want = 0.0;
    for (const auto& rho : multi_indices(2)) {
        Field d = u;
        for (int a = 0; a < rho[0]; ++a) d = derivative(d, 1);
        for (int a = 0; a < rho[1]; ++a) d = derivative(d, 2);
        for (int a = 0; a < rho[2]; ++a) d = derivative(d, 3);
        want += sup_norm(d, 2);
    }
    for (const auto& rho : multi_indices(1)) {
        Field d = v;
        for (int a = 0; a < rho[0]; ++a) d = derivative(d, 1);
        for (int a = 0; a < rho[1]; ++a) d = derivative(d, 2);
        for (int a = 0; a < rho[2]; ++a) d = derivative(d, 3);
        want += sup_norm(d, 2);
    }
    CHECK(got == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("theta tracker is monotone and rejects disordered samples") {
    ThetaTracker tracker;
    tracker.observe_value(0.0, 1.0);
    tracker.observe_value(1.0, 0.6);
    tracker.observe_value(2.0, 0.35);
    CHECK(tracker.theta() == doctest::Approx(1.2));
    CHECK(tracker.theta_at(0.5) == doctest::Approx(1.0));
    CHECK(tracker.theta_at(2.0) == doctest::Approx(1.2));
    CHECK_THROWS_AS(tracker.observe_value(1.5, 1.0), ContractViolation);
}

TEST_CASE("decay fit recovers exact power laws and validates inputs") {
    std::vector<std::pair<double, double>> samples;
    for (double t = 0.5; t <= 50.0; t += 0.5)
        samples.emplace_back(t, 3.25 * std::pow(1.0 + t, -1.5));
    DecayFit fit = fit_decay(samples, 1.0, 45.0);
    CHECK(fit.exponent == doctest::Approx(-1.5).epsilon(1e-12));
    CHECK(fit.amplitude == doctest::Approx(3.25).epsilon(1e-10));
    CHECK(fit.residual < 1e-12);

    std::vector<std::pair<double, double>> few(samples.begin(), samples.begin() + 5);
    CHECK_THROWS_AS(fit_decay(few, 0.0, 100.0), ContractViolation);
    samples[20].second = 0.0;
    CHECK_THROWS_AS(fit_decay(samples, 1.0, 45.0), NumericalFailure);
}

TEST_CASE("flat energy recovers exact Sobolev identities at low order") {
    GridSpec g = small_grid();
    Field u = random_band_field(g, 91, 0.8, true);
    Field v = random_band_field(g, 92, 0.8, true);
    NonlinearityCoeffs zero = preset_coeffs("zero");
    for (int N : {0, 1}) {
        EnergyBreakdown e = modified_energy(u, v, zero, N);
        double want = 0.0;
        if (N == 0)
            want = std::pow(sobolev_norm(v, 0.0), 2) + std::pow(sobolev_norm(u, 1.0), 2);
        else
            want = std::pow(sobolev_norm(v, 1.0), 2) + std::pow(sobolev_norm(u, 2.0), 2);
        CHECK(e.total == doctest::Approx(want).epsilon(1e-12));
        CHECK(e.correction == 0.0);
    }
}

TEST_CASE("energy is norm-equivalent within the contract window") {
    GridSpec g = small_grid();
    NonlinearityCoeffs mixed = preset_coeffs("mixed");
    for (int N : {0, 1, 2}) {
        for (std::uint64_t seed : {95u, 96u, 97u}) {
            Field u = random_band_field(g, seed, 0.8, true);
            Field v = random_band_field(g, seed + 100, 0.8, true);
            // scale to small data so the correction stays perturbative
            u *= cplx(1e-3, 0.0);
            v *= cplx(1e-3, 0.0);
            EnergyBreakdown e = modified_energy(u, v, mixed, N);
            double s = sobolev_norm(u, N + 1.0) + sobolev_norm(v, static_cast<double>(N));
            double ratio = std::sqrt(e.total) / s;
            CHECK(ratio >= 0.5);
            CHECK(ratio <= 2.0);
            CHECK(e.min_quadratic_eigenvalue > 0.9);
        }
    }
}

TEST_CASE("indefinite corrected quadratic form is rejected with diagnostics") {
    GridSpec g = small_grid();
    NonlinearityCoeffs c = preset_coeffs("zero");
    c.set_h(1, 1, 1.0);
    std::vector<cplx> samples(g.size(), cplx(-2.0, 0.0)); // 1 + u = -1 < 0
    Field u = forward_transform(g, samples);
    Field v(g);
    CHECK_THROWS_AS(modified_energy(u, v, c, 1), NumericalFailure);
}
