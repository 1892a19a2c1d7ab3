#pragma once

#include <vector>

#include "kglab/cutoffs.hpp"
#include "kglab/errors.hpp"
#include "kglab/grid.hpp"

namespace kg {

// Free-space kernel of e^{i sign t Lam_n} localized to one radial cutoff:
//   K(x) = int_{R^2} e^{i x.xi} e^{i sign t Lam_n(|xi|)} psi(|xi|) dxi
//        = 2 pi int_0^inf e^{i sign t Lam_n(r)} psi(r) r J0(r|x|) dr,
// with psi the core bump (shell = -1) or the dyadic annulus phi_k (shell = k).
struct KernelQuery {
    int shell = -1;
    int n = 0;
    double t = 0.0;
    int sign = 1;
    std::vector<double> radii; // |x| sample points, each >= 0
};

struct KernelResult {
    std::vector<cplx> values;
    double certified_error = 0.0; // max |fine - coarse| over radii
    int panels = 0;               // panel count of the accepted level
};

// Panel Gauss-Legendre quadrature, panel width tied to the total oscillation
// rate t max|Lam'| + max|x|; step-halving until the change is below tol
// (absolute).  Throws NumericalFailure naming the worst panel on budget
// exhaustion.
KernelResult eval_kernel(const KernelQuery& q, double tol,
                         const CutoffFamily& cut = CutoffFamily());

// Estimated sup over |x| of |K|: dense scan of the light-cone range at >= 8
// samples per fastest x-oscillation, then local refinement around the peak.
double kernel_sup(int shell, int n, double t, double tol,
                  double* arg_radius = nullptr,
                  const CutoffFamily& cut = CutoffFamily());

struct BoundRow {
    int k = -1;
    int n = 0;
    double t = 0.0;
    double sup_abs = 0.0;
    double bound = 0.0;
    double ratio = 0.0;
    double arg_radius = 0.0;
};

// Core-ring kernel against the bound (1+|n|) (1+t)^{-1}; asserts every ratio
// finite and the upper t-decade within 3x of the lower one.
std::vector<BoundRow> certify_ring_kernel(const std::vector<int>& n_values,
                                          const std::vector<double>& t_values,
                                          double tol);

// Annulus kernel against (2^{2k}+n^2) / (sqrt(1+n^2) t), t > 0 required.
std::vector<BoundRow> certify_shell_kernel(const std::vector<int>& k_values,
                                           const std::vector<int>& n_values,
                                           const std::vector<double>& t_values,
                                           double tol);

} // namespace kg
