#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "kglab/bessel.hpp"
#include "kglab/cutoffs.hpp"
#include "kglab/oscillatory.hpp"

using namespace kg;

namespace {

// Direct 2D Riemann sum of the kernel integral on a 512^2 grid covering the
// cutoff support; the integrand is smooth with compact support, so the
// periodic-trapezoid error is far below the comparison tolerance.
cplx dense_kernel(int shell, int n, double t, double x) {
    CutoffFamily cut;
    double R = shell == -1 ? cut.support_end / 2.0 + 0.05
                           : cut.support_end * std::ldexp(1.0, shell) + 0.05;
    int N = 512;
    double h = 2.0 * R / N;
    cplx acc(0.0, 0.0);
    for (int i = 0; i < N; ++i) {
        double xi1 = -R + (i + 0.5) * h;
        for (int j = 0; j < N; ++j) {
            double xi2 = -R + (j + 0.5) * h;
            double r = std::hypot(xi1, xi2);
            double psi = shell == -1 ? cut.bump(2.0 * r) : cut.shell(shell, r);
            if (psi == 0.0) continue;
            double phase = x * xi1 + t * std::sqrt(1.0 + r * r + double(n) * n);
            acc += psi * std::polar(1.0, phase);
        }
    }
    return acc * (h * h);
}

} // namespace

TEST_CASE("fast J0 agrees with the integral-representation reference") {
    for (double z = 0.0; z <= 60.0; z += 0.37)
        CHECK(bessel_j0(z) ==
              doctest::Approx(bessel_j0_reference(z)).epsilon(1e-10).scale(1.0));
    for (double z : {8.9, 9.0, 9.1, 120.0, 1000.0, 2500.0})
        CHECK(std::fabs(bessel_j0(z) - bessel_j0_reference(z)) < 1e-10);
    CHECK(bessel_j0(0.0) == 1.0);
    CHECK(std::fabs(bessel_j0(2.404825557695773)) < 1e-10);
}

TEST_CASE("static kernel at the origin lands in the support bracket") {
    KernelQuery q;
    q.shell = -1;
    q.radii = {0.0};
    KernelResult res = eval_kernel(q, 1e-8);
    double lo = pi * 0.625 * 0.625, hi = pi * 0.8 * 0.8;
    CHECK(res.values[0].real() >= lo);
    CHECK(res.values[0].real() <= hi);
    CHECK(std::fabs(res.values[0].imag()) < 1e-10);
    CHECK(res.certified_error <= 1e-8);
}

TEST_CASE("static kernel is independent of the transverse mode") {
    KernelQuery q;
    q.shell = 1;
    q.radii = {0.0, 0.9, 2.7};
    KernelResult a = eval_kernel(q, 1e-8);
    q.n = 3;
    KernelResult b = eval_kernel(q, 1e-8);
    for (size_t i = 0; i < a.values.size(); ++i)
        CHECK(std::abs(a.values[i] - b.values[i]) < 1e-9);
}

TEST_CASE("sign flip conjugates the kernel") {
    KernelQuery q;
    q.shell = 0;
    q.n = 2;
    q.t = 3.5;
    q.radii = {0.0, 1.1, 4.2};
    KernelResult plus = eval_kernel(q, 1e-8);
    q.sign = -1;
    KernelResult minus = eval_kernel(q, 1e-8);
    for (size_t i = 0; i < plus.values.size(); ++i)
        CHECK(std::abs(plus.values[i] - std::conj(minus.values[i])) < 1e-9);
}

TEST_CASE("radial quadrature matches a dense planar Riemann sum") {
    struct Probe {
        int shell, n;
        double t, x;
    };
    for (Probe p : {Probe{-1, 0, 0.0, 0.0}, Probe{-1, 0, 0.0, 1.7},
                    Probe{1, 0, 0.0, 5.3}, Probe{-1, 1, 2.0, 1.3},
                    Probe{0, 2, 4.0, 2.6}}) {
        KernelQuery q;
        q.shell = p.shell;
        q.n = p.n;
        q.t = p.t;
        q.radii = {p.x};
        KernelResult res = eval_kernel(q, 1e-8);
        cplx want = dense_kernel(p.shell, p.n, p.t, p.x);
        CHECK(std::abs(res.values[0] - want) < 1e-6);
    }
}

TEST_CASE("halving the tolerance moves values less than the previous tol") {
    KernelQuery q;
    q.shell = 2;
    q.n = 1;
    q.t = 12.0;
    q.radii = {0.0, 3.0, 8.0, 11.0};
    KernelResult coarse = eval_kernel(q, 1e-5);
    KernelResult fine = eval_kernel(q, 5e-8);
    for (size_t i = 0; i < coarse.values.size(); ++i)
        CHECK(std::abs(coarse.values[i] - fine.values[i]) < 1e-5);
}

TEST_CASE("query validation and the panel budget guard") {
    KernelQuery q;
    q.radii = {0.0};
    CHECK_THROWS_AS(eval_kernel(q, 0.0), ContractViolation);
    CHECK_THROWS_AS(eval_kernel(q, 1e-3), ContractViolation);
    q.sign = 0;
    CHECK_THROWS_AS(eval_kernel(q, 1e-6), ContractViolation);
    q.sign = 1;
    q.radii.clear();
    CHECK_THROWS_AS(eval_kernel(q, 1e-6), ContractViolation);
    q.radii = {-1.0};
    CHECK_THROWS_AS(eval_kernel(q, 1e-6), ContractViolation);
    q.radii = {0.0};
    q.shell = -2;
    CHECK_THROWS_AS(eval_kernel(q, 1e-6), ContractViolation);
    q.shell = 0;
    q.t = 1e9;
    CHECK_THROWS_AS(eval_kernel(q, 1e-6), NumericalFailure);
}

TEST_CASE("doubling time halves the core-ring kernel sup for t >= 10") {
    double s10 = kernel_sup(-1, 0, 10.0, 1e-7);
    double s20 = kernel_sup(-1, 0, 20.0, 1e-7);
    double ratio = s10 / s20;
    CHECK(ratio >= 1.5);
    CHECK(ratio <= 2.5);
}

TEST_CASE("small certification sweeps produce finite stable ratios") {
    auto ring = certify_ring_kernel({0, 1}, {1.0, 10.0}, 1e-6);
    CHECK(ring.size() == 4);
    for (const auto& row : ring) {
        CHECK(std::isfinite(row.ratio));
        CHECK(row.ratio > 0.0);
        CHECK(row.ratio == doctest::Approx(row.sup_abs / row.bound));
    }
    auto shell = certify_shell_kernel({0}, {0, 2}, {1.0, 4.0}, 1e-6);
    CHECK(shell.size() == 4);
    for (const auto& row : shell) CHECK(std::isfinite(row.ratio));
    CHECK_THROWS_AS(certify_shell_kernel({-1}, {0}, {1.0}, 1e-6),
                    ContractViolation);
    CHECK_THROWS_AS(certify_shell_kernel({0}, {0}, {0.0}, 1e-6),
                    ContractViolation);
}
