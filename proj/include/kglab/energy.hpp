#pragma once

#include "kglab/nonlinearity.hpp"

namespace kg {

// Corrected energy of order N:
//   sum_{|rho|<=N} Int (d_t d^rho u)^2 + sum_{j=1..3} (d_j d^rho u)^2 + (d^rho u)^2
//                + Int sum_{j,k=1..3} G^{jk}(u,du) d_j d^rho u d_k d^rho u.
// The flat part is evaluated spectrally; the correction pointwise. The
// pointwise quadratic form I + G must stay positive definite; if it does not,
// the state has left the small-data regime and a NumericalFailure is raised
// carrying the offending minimum eigenvalue.
struct EnergyBreakdown {
    double total = 0.0;
    double flat = 0.0;
    double correction = 0.0;
    double min_quadratic_eigenvalue = 1.0;
};

EnergyBreakdown modified_energy(const Field& u, const Field& udot,
                                const NonlinearityCoeffs& coeffs, int N);

} // namespace kg
