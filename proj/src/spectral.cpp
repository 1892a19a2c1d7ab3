#include "kglab/spectral.hpp"

#include <cmath>

namespace kg {

Field apply_lambda(const Field& f, double power) {
    return apply_multiplier(f, [power](double x1, double x2, double n) {
        return std::pow(1.0 + x1 * x1 + x2 * x2 + n * n, 0.5 * power);
    });
}

Field propagate(const Field& f, double t, int sign) {
    if (sign != 1 && sign != -1)
        throw ContractViolation("propagate: sign must be +1 or -1");
    return apply_multiplier(f, [t, sign](double x1, double x2, double n) {
        double phase = sign * t * lambda_symbol(x1, x2, n);
        return cplx(std::cos(phase), std::sin(phase));
    });
}

Field derivative(const Field& f, int axis) {
    switch (axis) {
        case 1: return apply_multiplier(f, [](double x1, double, double) { return cplx(0.0, x1); });
        case 2: return apply_multiplier(f, [](double, double x2, double) { return cplx(0.0, x2); });
        case 3: return apply_multiplier(f, [](double, double, double n) { return cplx(0.0, n); });
        default: throw ContractViolation("derivative: axis must be 1, 2 or 3");
    }
}

Field weighted_derivative(const Field& f, int axis) {
    if (axis < 1 || axis > 3)
        throw ContractViolation("weighted_derivative: axis must be 1, 2 or 3");
    return apply_multiplier(f, [axis](double x1, double x2, double n) {
        double z = axis == 1 ? x1 : axis == 2 ? x2 : n;
        return cplx(0.0, z / lambda_symbol(x1, x2, n));
    });
}

Field conj_reflect(const Field& f) {
    const GridSpec& g = f.grid;
    Field out(g);
    for (int i = 0; i < g.nx(); ++i) {
        int ri = (g.nx() - i) % g.nx();
        for (int j = 0; j < g.nx(); ++j) {
            int rj = (g.nx() - j) % g.nx();
            for (int q = 0; q < g.ny(); ++q) {
                int rq = (g.ny() - q) % g.ny();
                out.coeffs[g.at(i, j, q)] = std::conj(f.coeffs[g.at(ri, rj, rq)]);
            }
        }
    }
    return out;
}

Field hermitian_part(const Field& f) {
    Field out = conj_reflect(f);
    for (std::size_t i = 0; i < out.coeffs.size(); ++i)
        out.coeffs[i] = 0.5 * (out.coeffs[i] + f.coeffs[i]);
    return out;
}

bool inside_dealias_band(const GridSpec& g, int si, int sj, int n) {
    int pmax = static_cast<int>(std::floor(0.5 * g.nx() * g.dealias_fraction));
    int mmax = static_cast<int>(std::floor(g.mode_cutoff * g.dealias_fraction));
    return std::abs(si) <= pmax && std::abs(sj) <= pmax && std::abs(n) <= mmax;
}

void dealias_inplace(Field& f) {
    const GridSpec& g = f.grid;
    for (int i = 0; i < g.nx(); ++i)
        for (int j = 0; j < g.nx(); ++j)
            for (int q = 0; q < g.ny(); ++q)
                if (!inside_dealias_band(g, g.signed_plane(i), g.signed_plane(j), g.signed_mode(q)))
                    f.coeffs[g.at(i, j, q)] = cplx(0.0, 0.0);
}

double l2_norm(const Field& f) {
    double s = 0.0;
    for (const auto& c : f.coeffs) s += std::norm(c);
    return std::sqrt(f.grid.volume() * s);
}

double sup_norm(const Field& f, int oversample) {
    std::vector<cplx> phys = inverse_transform_oversampled(f, oversample);
    double m = 0.0;
    for (const auto& v : phys) m = std::max(m, std::abs(v));
    return m;
}

std::vector<double> real_samples(const Field& f) {
    std::vector<cplx> phys = inverse_transform(f);
    std::vector<double> out(phys.size());
    for (std::size_t i = 0; i < phys.size(); ++i) out[i] = phys[i].real();
    return out;
}

} // namespace kg
