#pragma once

#include <cstdint>
#include <vector>

#include "kglab/cutoffs.hpp"

namespace kg {

// One measured point of the composite dispersive bound
//   sup_{x,y} |R_{[-1,k]} e^{itLam} S_l g|  <=  C 2^{2(k+l)} (1+t)^{-1} ||g||_1.
struct DispersiveProbe {
    int g_index = 0;
    int k = 0;
    int l = 0;
    double t = 0.0;
    double sup = 0.0;
    double l1 = 0.0;
    double ratio = 0.0; // sup * (1+t) / (2^{2(k+l)} * l1)
};

struct DispersiveCertification {
    std::vector<DispersiveProbe> probes;
    std::vector<double> g_constants; // per-sample max ratio over (k,l,t)
    double max_ratio = 0.0;          // the single recorded constant
    double constant_spread = 1.0;    // max over samples / min over samples
};

// Draws g_count identically distributed band-limited samples g(x,y) =
// G(x) p(y) (a two-Gaussian cluster in the plane times a few unit-modulus
// circle modes), propagates each exactly mode by mode on a dedicated plane
// grid, and measures the ratio at every (k,l) in {-1..3}^2 on which S_l g
// does not vanish, for every requested time.  Every ratio must be finite and
// the per-sample constants max_{k,l,t} ratio must agree within spread_budget
// across samples, so that a single constant genuinely bounds the family;
// throws CertificationFailure otherwise.
DispersiveCertification certify_dispersive_composite(
    int g_count, const std::vector<double>& times, std::uint64_t seed,
    double spread_budget = 5.0, const CutoffFamily& cut = CutoffFamily());

} // namespace kg
