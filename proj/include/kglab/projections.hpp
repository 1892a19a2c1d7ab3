#pragma once

#include <optional>

#include "kglab/cutoffs.hpp"
#include "kglab/field.hpp"

namespace kg {

// Frequency-shell projection R_k S_l: multiply by psi_k(|xi|) psi_l(|n|).
// k, l >= -1; index -1 is the low ball (and, on the circle, exactly the n=0
// projector since psi_{-1}(n) vanishes at every nonzero integer).
Field project_frequency(const Field& f, int k, int l,
                        const CutoffFamily& cut = CutoffFamily());

// Interval version R_[k0,k1] S_[l0,l1] with telescoped multipliers, so the
// composition with a contained single shell is bitwise idempotent.
Field project_frequency_interval(const Field& f, int k0, int k1, int l0, int l1,
                                 const CutoffFamily& cut = CutoffFamily());

// Plane-radial spatial atom. Shell j >= 1 multiplies by phi_j(|x|) (min-image
// radius); j = 0 is the cumulative core bump(|x|), so shells 0..J telescope to
// an exact partition of unity on radii below 5/4 * 2^J. Shells whose dyadic
// radius exceeds half the box are out of range and yield nullopt.
std::optional<Field> project_space(const Field& f, int j,
                                   const CutoffFamily& cut = CutoffFamily());

// Largest in-range spatial shell index for this grid.
int max_space_shell(const GridSpec& g);

// Largest shell index needed to cover the plane / circle lattice; the interval
// [-1, max] telescopes to exactly 1 on every resolved frequency.
int max_plane_shell(const GridSpec& g);
int max_mode_shell(const GridSpec& g);

// Diagnostics for the band-limited derivative and embedding inequalities.
// finite_band_ratio: ||d_axis R_k S_l f||_p / (2^{k or l} ||R_k S_l f||_p).
// bernstein_ratio:  ||R_k S_l f||_r / (2^{(k+l/2)(1-2/r)} ||f||_2), r >= 2.
double finite_band_ratio(const Field& f, int k, int l, int axis, double p,
                         const CutoffFamily& cut = CutoffFamily());
double bernstein_ratio(const Field& f, int k, int l, double r,
                       const CutoffFamily& cut = CutoffFamily());

// L^p norm of the interpolant by Riemann sum on an oversampled grid;
// p = infinity is available through sup_norm in spectral.hpp.
double lp_norm(const Field& f, double p, int oversample = 2);

} // namespace kg
