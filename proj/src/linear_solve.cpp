#include "kglab/linear_solve.hpp"

#include <cmath>

#include "kglab/norms.hpp"
#include "kglab/spectral.hpp"

namespace kg {

LinearState linear_kg_solve(const Field& u0, const Field& u1, double t) {
    u0.require_same_grid(u1, "linear_kg_solve");
    LinearState out{Field(u0.grid), Field(u0.grid)};
    const GridSpec& g = u0.grid;
    for (int i = 0; i < g.nx(); ++i)
        for (int j = 0; j < g.nx(); ++j)
            for (int q = 0; q < g.ny(); ++q) {
                size_t idx = g.at(i, j, q);
                double lam = lambda_symbol(g.signed_plane(i) * g.xi_unit(),
                                           g.signed_plane(j) * g.xi_unit(),
                                           g.signed_mode(q));
                double c = std::cos(t * lam), s = std::sin(t * lam);
                cplx a = u0.coeffs[idx], b = u1.coeffs[idx];
                out.u.coeffs[idx] = c * a + (s / lam) * b;
                out.udot.coeffs[idx] = -lam * s * a + c * b;
            }
    return out;
}

DecayFit certify_linear_decay(const Field& u0, const Field& u1,
                              double window_lo, double window_hi,
                              int n_samples) {
    u0.require_same_grid(u1, "linear_kg_solve");
    if (!(window_lo >= 0.0) || !(window_hi > window_lo))
        throw ContractViolation("certify_linear_decay: bad window");
    double horizon = u0.grid.box_period / 2.0;
    if (window_hi >= horizon)
        throw ContractViolation(
            "certify_linear_decay: window reaches the periodic wrap horizon");
    if (n_samples < 8)
        throw ContractViolation("certify_linear_decay: need >= 8 samples");

    std::vector<std::pair<double, double>> samples;
    samples.reserve(n_samples);
    double a = 1.0 + window_lo, b = 1.0 + window_hi;
    for (int i = 0; i < n_samples; ++i) {
        double t = a * std::pow(b / a, i / (n_samples - 1.0)) - 1.0;
        LinearState st = linear_kg_solve(u0, u1, t);
        samples.emplace_back(t, dispersive_sum(st.u, st.udot));
    }
    return fit_decay(samples, window_lo, window_hi);
}

} // namespace kg
