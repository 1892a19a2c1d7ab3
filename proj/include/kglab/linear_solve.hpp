#pragma once

#include "kglab/decay_fit.hpp"
#include "kglab/field.hpp"

namespace kg {

struct LinearState {
    Field u;
    Field udot;
};

// Exact spectral solution of u_tt - Lap u + u = 0:
//   u^(t) = cos(t Lam) u0^ + sin(t Lam)/Lam u1^.
LinearState linear_kg_solve(const Field& u0, const Field& u1, double t);

// Closed-form evolution sampled on a log-spaced window, decay exponent of
// the weighted sup-norm sum fitted against (1+t).  The window must end
// before the periodic wrap horizon L/2.
DecayFit certify_linear_decay(const Field& u0, const Field& u1,
                              double window_lo, double window_hi,
                              int n_samples = 30);

} // namespace kg
