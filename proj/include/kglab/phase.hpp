#pragma once

#include <array>
#include <cstdint>

#include "kglab/errors.hpp"

namespace kg {

// Quadratic-interaction phase Phi(xi,eta) = Lam_n(xi) - mu Lam_{n-m}(xi-eta)
// - nu Lam_m(eta), with Lam_n(xi) = sqrt(1 + |xi|^2 + n^2).
struct PhaseQuery {
    double xi1 = 0.0, xi2 = 0.0;
    double eta1 = 0.0, eta2 = 0.0;
    int n = 0;
    int m = 0;
    int mu = 1;
    int nu = 1;
};

double phase(const PhaseQuery& q);

// Derivatives in the order (xi1, xi2, eta1, eta2).
std::array<double, 4> phase_gradient(const PhaseQuery& q);
std::array<std::array<double, 4>, 4> phase_hessian(const PhaseQuery& q);

// 1 / (2 sqrt(1 + min(a, b, c))) with a = |xi|^2 + n^2, b = |xi-eta|^2 +
// (n-m)^2, c = |eta|^2 + m^2.  Every phase value obeys |Phi| >= this.
double phase_lower_bound(const PhaseQuery& q);

struct PhaseSweepReport {
    long long samples = 0;       // channel evaluations (4 per geometric draw)
    long long violations = 0;
    double min_margin = 0.0;     // min |Phi| / lower bound over the sweep
    double sup_grad_ratio = 0.0; // sup |grad Phi| / |Phi|
    double sup_inv_first = 0.0;  // sup |d(1/Phi)| * |Phi|  (= grad ratio)
    double sup_inv_second = 0.0; // sup |d^2(1/Phi)| * |Phi| (worst entry)
    PhaseQuery worst;            // query attaining min_margin
};

// Randomized sweep over frequency scales, near-collinear pairs, and mode
// numbers; throws NumericalFailure naming the witness query if any channel
// dips below the lower bound.
PhaseSweepReport verify_phase_bounds(long long sample_count,
                                     std::uint64_t seed = 2026);

} // namespace kg
