#include "kglab/decay_fit.hpp"

#include <cmath>

namespace kg {

DecayFit fit_decay(const std::vector<std::pair<double, double>>& samples,
                   double window_lo, double window_hi) {
    if (!(window_lo < window_hi))
        throw ContractViolation("fit_decay: empty window");
    if (window_lo < 1.0)
        throw ContractViolation("fit_decay: window must start at t >= 1");
    std::vector<std::pair<double, double>> pts;
    for (const auto& [t, v] : samples) {
        if (t < window_lo || t > window_hi) continue;
        if (!(v > 0.0) || !std::isfinite(v))
            throw NumericalFailure("fit_decay: nonpositive or non-finite sample inside window");
        pts.emplace_back(std::log1p(t), std::log(v));
    }
    if (pts.size() < 8)
        throw ContractViolation("fit_decay: need at least 8 samples inside the window");

    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double n = static_cast<double>(pts.size());
    double det = n * sxx - sx * sx;
    if (det <= 0.0) throw NumericalFailure("fit_decay: degenerate abscissae");
    DecayFit fit;
    fit.window_lo = window_lo;
    fit.window_hi = window_hi;
    fit.exponent = (n * sxy - sx * sy) / det;
    double intercept = (sy - fit.exponent * sx) / n;
    fit.amplitude = std::exp(intercept);
    double rss = 0.0;
    for (const auto& [x, y] : pts) {
        double r = y - (intercept + fit.exponent * x);
        rss += r * r;
    }
    fit.residual = std::sqrt(rss / n);
    fit.n_used = static_cast<int>(pts.size());
    return fit;
}

} // namespace kg
