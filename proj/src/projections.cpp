#include "kglab/projections.hpp"

#include <cmath>

#include "kglab/spectral.hpp"

namespace kg {

Field project_frequency(const Field& f, int k, int l, const CutoffFamily& cut) {
    if (k < -1 || l < -1)
        throw ContractViolation("project_frequency: shell indices must be >= -1");
    return apply_multiplier(f, [&](double x1, double x2, double n) {
        return cut.ring(k, std::hypot(x1, x2)) * cut.ring(l, n);
    });
}

Field project_frequency_interval(const Field& f, int k0, int k1, int l0, int l1,
                                 const CutoffFamily& cut) {
    if (k0 < -1 || l0 < -1 || k1 < k0 || l1 < l0)
        throw ContractViolation("project_frequency_interval: bad interval");
    return apply_multiplier(f, [&](double x1, double x2, double n) {
        return cut.ring_interval(k0, k1, std::hypot(x1, x2)) * cut.ring_interval(l0, l1, n);
    });
}

int max_space_shell(const GridSpec& g) {
    int j = 0;
    while (std::ldexp(1.0, j + 1) <= 0.5 * g.box_period) ++j;
    return j;
}

namespace {

int covering_shell(double top) {
    // smallest b with 5/4 * 2^b >= top, so ring_interval(-1, b) == 1 up to top
    int b = 0;
    while (1.25 * std::ldexp(1.0, b) < top) ++b;
    return b;
}

} // namespace

int max_plane_shell(const GridSpec& g) { return covering_shell(g.xi_max() * std::sqrt(2.0)); }
int max_mode_shell(const GridSpec& g) { return covering_shell(static_cast<double>(g.mode_cutoff)); }

std::optional<Field> project_space(const Field& f, int j, const CutoffFamily& cut) {
    if (j < 0) throw ContractViolation("project_space: shell index must be >= 0");
    if (j > max_space_shell(f.grid)) return std::nullopt;
    const GridSpec& g = f.grid;
    std::vector<cplx> phys = inverse_transform(f);
    for (int i = 0; i < g.nx(); ++i) {
        double x1 = g.coord(i);
        for (int jj = 0; jj < g.nx(); ++jj) {
            double r = std::hypot(x1, g.coord(jj));
            double w = j == 0 ? cut.bump(r) : cut.shell(j, r);
            std::size_t base = (static_cast<std::size_t>(i) * g.nx() + jj) * g.ny();
            for (int q = 0; q < g.ny(); ++q) phys[base + q] *= w;
        }
    }
    return forward_transform(g, phys);
}

double lp_norm(const Field& f, double p, int oversample) {
    if (!(p >= 1.0) || !std::isfinite(p))
        throw ContractViolation("lp_norm: p must be finite and >= 1");
    GridSpec fine;
    std::vector<cplx> phys = inverse_transform_oversampled(f, oversample, &fine);
    double s = 0.0;
    for (const auto& v : phys) s += std::pow(std::abs(v), p);
    return std::pow(s * fine.cell_volume(), 1.0 / p);
}

namespace {

double norm_any(const Field& f, double p) {
    if (std::isinf(p)) return sup_norm(f, 2);
    if (p == 2.0) return l2_norm(f);
    return lp_norm(f, p, 2);
}

} // namespace

double finite_band_ratio(const Field& f, int k, int l, int axis, double p,
                         const CutoffFamily& cut) {
    Field piece = project_frequency(f, k, l, cut);
    double denom = norm_any(piece, p);
    if (denom == 0.0) return 0.0;
    Field d = derivative(piece, axis);
    double scale = std::ldexp(1.0, axis == 3 ? l : k);
    return norm_any(d, p) / (scale * denom);
}

double bernstein_ratio(const Field& f, int k, int l, double r,
                       const CutoffFamily& cut) {
    if (!(r >= 2.0)) throw ContractViolation("bernstein_ratio: r must be >= 2");
    double base = l2_norm(f);
    if (base == 0.0) return 0.0;
    Field piece = project_frequency(f, k, l, cut);
    double lhs = norm_any(piece, r);
    double expo = (k + 0.5 * l) * (1.0 - 2.0 / r);
    return lhs / (std::pow(2.0, expo) * base);
}

} // namespace kg
