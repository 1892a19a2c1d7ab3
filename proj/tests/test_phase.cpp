#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "kglab/data.hpp"
#include "kglab/phase.hpp"

using namespace kg;

TEST_CASE("phase closed forms at the zero frequency") {
    PhaseQuery q;
    q.mu = 1;
    q.nu = 1;
    CHECK(phase(q) == doctest::Approx(-1.0));
    q.nu = -1;
    CHECK(phase(q) == doctest::Approx(1.0));
    q.mu = -1;
    q.nu = 1;
    CHECK(phase(q) == doctest::Approx(1.0));
    q.nu = -1;
    CHECK(phase(q) == doctest::Approx(3.0));
    CHECK(phase_lower_bound(q) == doctest::Approx(0.5));
    q.mu = 2;
    CHECK_THROWS_AS(phase(q), ContractViolation);
}

TEST_CASE("analytic gradient matches central differences") {
    Rng rng(7);
    double h = 1e-5;
    for (int it = 0; it < 200; ++it) {
        PhaseQuery q;
        q.xi1 = 5.0 * rng.gaussian();
        q.xi2 = 5.0 * rng.gaussian();
        q.eta1 = 5.0 * rng.gaussian();
        q.eta2 = 5.0 * rng.gaussian();
        q.n = rng.integer(-4, 4);
        q.m = rng.integer(-4, 4);
        q.mu = rng.integer(0, 1) == 0 ? 1 : -1;
        q.nu = rng.integer(0, 1) == 0 ? 1 : -1;
        auto g = phase_gradient(q);
        double* slots[4] = {&q.xi1, &q.xi2, &q.eta1, &q.eta2};
        for (int a = 0; a < 4; ++a) {
            double save = *slots[a];
            *slots[a] = save + h;
            double up = phase(q);
            *slots[a] = save - h;
            double dn = phase(q);
            *slots[a] = save;
            CHECK(g[a] == doctest::Approx((up - dn) / (2.0 * h)).epsilon(1e-8));
        }
    }
}

TEST_CASE("analytic hessian matches differenced gradients") {
    Rng rng(8);
    double h = 1e-5;
    for (int it = 0; it < 40; ++it) {
        PhaseQuery q;
        q.xi1 = 3.0 * rng.gaussian();
        q.xi2 = 3.0 * rng.gaussian();
        q.eta1 = 3.0 * rng.gaussian();
        q.eta2 = 3.0 * rng.gaussian();
        q.n = rng.integer(-2, 2);
        q.m = rng.integer(-2, 2);
        q.mu = rng.integer(0, 1) == 0 ? 1 : -1;
        q.nu = rng.integer(0, 1) == 0 ? 1 : -1;
        auto H = phase_hessian(q);
        double* slots[4] = {&q.xi1, &q.xi2, &q.eta1, &q.eta2};
        for (int a = 0; a < 4; ++a) {
            double save = *slots[a];
            *slots[a] = save + h;
            auto up = phase_gradient(q);
            *slots[a] = save - h;
            auto dn = phase_gradient(q);
            *slots[a] = save;
            for (int b = 0; b < 4; ++b)
                CHECK(H[a][b] ==
                      doctest::Approx((up[b] - dn[b]) / (2.0 * h)).epsilon(5e-7));
        }
    }
}

TEST_CASE("the lower bound is nearly attained on the equal-split ray") {
    // xi large, eta = xi/2, zero modes: |Phi| ~ 3/(2R) vs bound ~ 1/R.
    PhaseQuery q;
    q.xi1 = 200.0;
    q.eta1 = 100.0;
    q.mu = 1;
    q.nu = 1;
    double margin = std::abs(phase(q)) / phase_lower_bound(q);
    CHECK(margin >= 1.0);
    CHECK(margin <= 2.0);
}

TEST_CASE("randomized sweep finds no bound violations") {
    PhaseSweepReport rep = verify_phase_bounds(20000, 99);
    CHECK(rep.samples >= 20000);
    CHECK(rep.violations == 0);
    CHECK(rep.min_margin >= 1.0 - 1e-9);
    CHECK(std::isfinite(rep.sup_grad_ratio));
    CHECK(std::isfinite(rep.sup_inv_second));
    CHECK(rep.sup_grad_ratio > 0.0);
    MESSAGE("min margin ", rep.min_margin, ", sup |grad|/|Phi| ",
            rep.sup_grad_ratio, ", sup |d2(1/Phi)||Phi| ", rep.sup_inv_second);
    CHECK_THROWS_AS(verify_phase_bounds(0), ContractViolation);
}
