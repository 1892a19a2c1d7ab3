#pragma once

#include <functional>

#include "kglab/field.hpp"
#include "kglab/transform.hpp"

namespace kg {

// Apply a diagonal frequency multiplier m(xi1, xi2, n) in place.
template <typename Fn>
void apply_multiplier_inplace(Field& f, Fn&& m) {
    const GridSpec& g = f.grid;
    const double du = g.xi_unit();
    for (int i = 0; i < g.nx(); ++i) {
        double xi1 = du * g.signed_plane(i);
        for (int j = 0; j < g.nx(); ++j) {
            double xi2 = du * g.signed_plane(j);
            std::size_t base = (static_cast<std::size_t>(i) * g.nx() + j) * g.ny();
            for (int q = 0; q < g.ny(); ++q)
                f.coeffs[base + q] *= m(xi1, xi2, static_cast<double>(g.signed_mode(q)));
        }
    }
}

template <typename Fn>
Field apply_multiplier(const Field& f, Fn&& m) {
    Field out = f;
    apply_multiplier_inplace(out, m);
    return out;
}

// (1 + |xi|^2 + n^2)^(power/2), i.e. Lambda^power.
Field apply_lambda(const Field& f, double power);

// exp(i * sign * t * Lambda). sign must be +1 or -1.
Field propagate(const Field& f, double t, int sign);

// Plain derivative: axis 1,2 are the plane directions, axis 3 the circle.
Field derivative(const Field& f, int axis);

// Lambda-normalized derivative i*zeta_axis / Lambda; a contraction on L2.
Field weighted_derivative(const Field& f, int axis);

// Coefficients of the complex conjugate field: c'(k) = conj(c(-k)).
Field conj_reflect(const Field& f);

// Projection onto real-valued fields (Hermitian part of the coefficients).
Field hermitian_part(const Field& f);

// Zero every coefficient outside the grid's dealias band:
// |s| <= floor(nx/2 * fraction) per plane axis, |n| <= floor(K * fraction).
void dealias_inplace(Field& f);
bool inside_dealias_band(const GridSpec& g, int si, int sj, int n);

// sqrt(volume) * ||coeffs||_2; exact L2 norm of the interpolant.
double l2_norm(const Field& f);

// Max |f| on a grid refined `oversample`-fold in each direction.
double sup_norm(const Field& f, int oversample = 2);

// Physical samples of the real part, on the native grid.
std::vector<double> real_samples(const Field& f);

} // namespace kg
