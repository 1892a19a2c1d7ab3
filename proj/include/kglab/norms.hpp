#pragma once

#include <array>
#include <vector>

#include "kglab/cutoffs.hpp"
#include "kglab/field.hpp"

namespace kg {

// All multi-indices rho over (x1, x2, y) with |rho| <= order.
std::vector<std::array<int, 3>> multi_indices(int order);

// (sum (1+|xi|^2+n^2)^s |coeff|^2 * volume)^(1/2).
double sobolev_norm(const Field& f, double s);

// Riemann L1 of |f| on an oversampled grid.
double l1_norm(const Field& f, int oversample = 2);

// Sup norms of a batch of real fields, two per inverse transform.
std::vector<double> sup_norms_packed(const std::vector<const Field*>& fields,
                                     int oversample = 2);

// Weighted dyadic-atom norm
//   sup_{k,l >= -1} 2^{9(k+l)} ( ||R_k S_l f||_2 + sum_{j>=1} 2^j ||phi_j R_k S_l f||_2 )
// and its localized variant with spatial weight 2^{min(j, 2J - j)}.
struct ShellEntry {
    int k = 0, l = 0;
    double l2 = 0.0;        // ||R_k S_l f||_2
    double weighted = 0.0;  // full bracket including spatial terms
    double value = 0.0;     // 2^{9(k+l)} * weighted
};

struct ZNormResult {
    double value = 0.0;
    int arg_k = -1, arg_l = -1; // shell attaining the sup
    std::vector<ShellEntry> table;
};

ZNormResult z_norm(const Field& f, const CutoffFamily& cut = CutoffFamily());
ZNormResult z_j_norm(const Field& f, int J, const CutoffFamily& cut = CutoffFamily());

// sum_{|rho|<=2} ||d^rho u||_inf + sum_{|rho|<=1} ||d^rho udot||_inf.
double dispersive_sum(const Field& u, const Field& udot);

// theta(s) = sup_{tau <= s} (1+tau) * dispersive_sum(tau), tracked over a run.
class ThetaTracker {
  public:
    void observe(double t, const Field& u, const Field& udot);
    void observe_value(double t, double dsum);
    double theta() const;
    double theta_at(double t) const; // sup restricted to samples with tau <= t
    const std::vector<std::pair<double, double>>& samples() const { return samples_; }

  private:
    std::vector<std::pair<double, double>> samples_; // (t, dispersive_sum)
};

} // namespace kg
