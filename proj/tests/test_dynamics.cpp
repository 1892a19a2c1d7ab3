#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "kglab/data.hpp"
#include "kglab/dynamics.hpp"
#include "kglab/multiplier.hpp"
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

StateU scaled_state(const GridSpec& g, double eps, std::uint64_t seed) {
    Field u0 = eps * random_band_field(g, seed);
    Field u1 = eps * random_band_field(g, seed + 1);
    return normalize_initial_data(u0, u1);
}

double state_dist(const Field& a, const Field& b) { return l2_norm(a - b); }

// One step of size h against two of h/2, from the same state.
double halving_defect(Stepper& st, const StateU& s0, double h) {
    StateU one = s0;
    st.step(one, h);
    StateU two = s0;
    st.step(two, 0.5 * h);
    st.step(two, 0.5 * h);
    return state_dist(one.U, two.U);
}

} // namespace

TEST_CASE("normalization round-trips and rejects complex data") {
    GridSpec g = small_grid();
    Field u0 = random_band_field(g, 31);
    Field u1 = random_band_field(g, 32);
    StateU s = normalize_initial_data(u0, u1);
    auto [u, udot] = unpack_state(s);
    CHECK(state_dist(u, u0) < 1e-12);
    CHECK(state_dist(udot, u1) < 1e-12);

    // cos mode with zero velocity: U^ = -i Lam u^ on both lattice points
    Field c(g);
    int s3 = 3;
    c.coeffs[g.at(g.plane_index(s3), 0, 0)] = cplx(0.5, 0.0);
    c.coeffs[g.at(g.plane_index(-s3), 0, 0)] = cplx(0.5, 0.0);
    Field zero(g);
    StateU sm = normalize_initial_data(c, zero);
    double lam = lambda_symbol(s3 * g.xi_unit(), 0.0, 0.0);
    CHECK(std::abs(sm.U.coeffs[g.at(g.plane_index(s3), 0, 0)] -
                   cplx(0.0, -0.5 * lam)) < 1e-14);

    Field oneside(g);
    oneside.coeffs[g.at(g.plane_index(2), 0, 0)] = cplx(1.0, 0.0);
    CHECK_THROWS_AS(normalize_initial_data(oneside, zero), ContractViolation);
    CHECK_THROWS_AS(normalize_initial_data(zero, oneside), ContractViolation);
}

TEST_CASE("a zero-coefficient step is exactly the propagator") {
    GridSpec g = small_grid();
    Stepper st(g, preset_coeffs("zero"));
    StateU s = scaled_state(g, 1.0, 41);
    Field want = propagate(s.U, 0.3, -1);
    st.step(s, 0.3);
    CHECK(state_dist(s.U, want) == 0.0);
    CHECK(s.t == 0.3);
}

TEST_CASE("the interaction profile is stationary under the linear flow") {
    GridSpec g = small_grid();
    Stepper st(g, preset_coeffs("zero"));
    StateU s = scaled_state(g, 1.0, 43);
    Field v0 = st.profile(s);
    CHECK(state_dist(v0, s.U) == 0.0); // t = 0
    for (int i = 0; i < 40; ++i) st.step(s, 0.5);
    CHECK(s.t == doctest::Approx(20.0));
    CHECK(state_dist(st.profile(s), v0) < 1e-10);
}

TEST_CASE("step validates its inputs") {
    GridSpec g = small_grid();
    Stepper st(g, preset_coeffs("mixed"));
    CHECK(st.h_max() == 0.75); // 8 / Lam_top > 0.75 here
    GridSpec fine = g;
    fine.plane_points = 128;
    Stepper stf(fine, preset_coeffs("mixed"));
    double lam_top = lambda_symbol(8.0, 8.0, 3.0);
    CHECK(stf.h_max() == doctest::Approx(8.0 / lam_top));

    StateU s = scaled_state(g, 1e-2, 45);
    CHECK_THROWS_AS(st.step(s, 0.0), ContractViolation);
    CHECK_THROWS_AS(st.step(s, -0.1), ContractViolation);
    CHECK_THROWS_AS(st.step(s, st.h_max() * 1.01), ContractViolation);
    StateU other = scaled_state(fine, 1e-2, 46);
    CHECK_THROWS_AS(st.step(other, 0.1), ContractViolation);
}

TEST_CASE("violent data trips the blow-up guard") {
    GridSpec g = small_grid();
    NonlinearityCoeffs c;
    c.set_q(1, 1, 1.0);
    Stepper st(g, c);
    StateU s = scaled_state(g, 1e3, 47);
    CHECK_THROWS_AS(st.step(s, 0.5), NumericalFailure);
}

TEST_CASE("one-step profile motion matches the instantaneous source") {
    GridSpec g = small_grid();
    Stepper st(g, preset_coeffs("mixed"));
    StateU s = scaled_state(g, 1e-2, 49);
    double src = l2_norm(st.rhs(s.U));
    Field v0 = st.profile(s);
    double h = 0.25;
    st.step(s, h);
    double moved = state_dist(st.profile(s), v0);
    CHECK(moved > 0.5 * h * src);
    CHECK(moved < 2.0 * h * src);
}

TEST_CASE("observed one-step order is at least 4.5") {
    GridSpec g = small_grid();
    Stepper st(g, preset_coeffs("mixed"));
    StateU s0 = scaled_state(g, 3e-2, 51);
    double e1 = halving_defect(st, s0, 0.4);
    double e2 = halving_defect(st, s0, 0.2);
    double e3 = halving_defect(st, s0, 0.1);
    CHECK(e3 > 1e-14); // above the roundoff floor, so the ratios mean something
    double p12 = std::log2(e1 / e2);
    double p23 = std::log2(e2 / e3);
    CHECK(p12 > 4.5);
    CHECK(p23 > 4.5);
    CHECK(p12 < 5.6);
    CHECK(p23 < 5.6);
}

TEST_CASE("deviation from the linear flow scales quadratically in amplitude") {
    GridSpec g = small_grid();
    Stepper st(g, preset_coeffs("mixed"));
    double T = 2.0, h = 0.25;
    auto deviation = [&](double eps) {
        StateU s = scaled_state(g, eps, 53);
        Field lin = propagate(s.U, T, -1);
        for (int i = 0; i < 8; ++i) st.step(s, h);
        return state_dist(s.U, lin);
    };
    double d1 = deviation(1e-2);
    double d2 = deviation(5e-3);
    CHECK(d1 / d2 == doctest::Approx(4.0).epsilon(0.2));
}

TEST_CASE("unpacked fields stay real through a quasilinear run") {
    GridSpec g = small_grid();
    Stepper st(g, preset_coeffs("mixed"));
    StateU s = scaled_state(g, 1e-2, 55);
    for (int i = 0; i < 20; ++i) st.step(s, 0.25);
    auto [u, udot] = unpack_state(s);
    CHECK(l2_norm(u - hermitian_part(u)) < 1e-11 * l2_norm(u));
    CHECK(l2_norm(udot - hermitian_part(udot)) < 1e-11 * l2_norm(udot));
}

TEST_CASE("time-derivative-squared symbol is constant 1/4 on every channel") {
    MultiplierSymbol M = multiplier_symbols(preset_coeffs("dtu2"));
    CHECK(M.terms.size() == 1);
    Rng rng(57);
    for (int i = 0; i < 32; ++i) {
        double x1 = rng.uniform(-30.0, 30.0), x2 = rng.uniform(-30.0, 30.0);
        double e1 = rng.uniform(-30.0, 30.0), e2 = rng.uniform(-30.0, 30.0);
        int n = rng.integer(-9, 9), m = rng.integer(-9, 9);
        for (int mu : {-1, 1})
            for (int nu : {-1, 1}) {
                cplx v = M.eval_channel(x1, x2, e1, e2, n, m, mu, nu);
                CHECK(std::abs(v - cplx(0.25, 0.0)) < 1e-15);
            }
    }
}

TEST_CASE("derived symbols stay inside the admissible family") {
    CHECK(multiplier_symbols(preset_coeffs("zero")).empty());
    for (const char* name : {"dtu2", "u2", "mixed"})
        CHECK(symbols_in_family(multiplier_symbols(preset_coeffs(name))));

    MultiplierSymbol bad;
    BilinearTerm t;
    t.a.e1 = 2;
    t.a.lam_pow = -1;
    t.a.c_plus = t.a.c_minus = cplx(1.0, 0.0);
    t.b = t.a;
    bad.terms.push_back(t);
    CHECK(!symbols_in_family(bad));
}

TEST_CASE("spectral channel assembly agrees with the physical assembly") {
    GridSpec g = small_grid();

    NonlinearityCoeffs custom;
    custom.set_g(0, 1, 2, 0.3);
    custom.set_g(1, 2, 0, -0.4);
    custom.set_g(2, 3, 3, 0.7);
    custom.set_h(1, 3, -0.2);
    custom.set_h(0, 2, 0.6);
    custom.set_q(2, 3, 1.1);
    custom.set_q(1, 4, -0.8);
    custom.set_q(0, 0, 0.5);

    int seed = 61;
    for (const NonlinearityCoeffs& c : {preset_coeffs("mixed"), custom}) {
        Field u0 = random_band_field(g, seed);
        Field u1 = random_band_field(g, seed + 1);
        seed += 2;
        StateU s = normalize_initial_data(u0, u1);
        auto [u, udot] = unpack_state(s);
        Field phys = evaluate_nonlinearity(u, udot, c);
        Field spec = bilinear_rhs(multiplier_symbols(c), s.U);
        CHECK(state_dist(phys, spec) < 1e-10 * std::max(1.0, l2_norm(phys)));
    }
}
