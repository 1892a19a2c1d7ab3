#pragma once

#include <utility>
#include <vector>

#include "kglab/errors.hpp"

namespace kg {

// Least-squares fit of log(value) against log(1+t) over a time window.
// amplitude is the fitted value at t = 0, residual the rms log misfit.
// Windows start at t >= 1 so the log-log abscissa is well spread.
struct DecayFit {
    double window_lo = 0.0;
    double window_hi = 0.0;
    double exponent = 0.0;
    double amplitude = 0.0;
    double residual = 0.0;
    int n_used = 0;
};

DecayFit fit_decay(const std::vector<std::pair<double, double>>& samples,
                   double window_lo, double window_hi);

} // namespace kg
