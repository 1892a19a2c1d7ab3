#pragma once

#include <string>

#include "kglab/errors.hpp"

namespace kg {

// Radial bump family used for every dyadic decomposition. The base bump is
// even, identically 1 on [-5/4, 5/4], identically 0 outside (-8/5, 8/5), and
// interpolates with a named mollifier recipe in between:
//   "exp"   : normalized exp(-1/t) smoothstep, C-infinity
//   "poly9" : ninth-order polynomial smoothstep, C4
// Outside the transition the returned values are exactly 1.0 / 0.0, which the
// support-discipline and overlap tests rely on bitwise.
class CutoffFamily {
  public:
    explicit CutoffFamily(std::string profile = "exp");

    double bump(double r) const;                       // phi
    double shell(int k, double r) const;               // phi_k, any integer k
    double ring(int l, double r) const;                // psi_l, l >= -1
    double ring_interval(int a, int b, double r) const;  // sum psi_m, -1 <= a <= b
    double shell_interval(int a, int b, double r) const; // sum phi_m, a <= b

    static constexpr double plateau_end = 1.25;   // 5/4
    static constexpr double support_end = 1.6;    // 8/5

    const std::string& profile() const { return profile_; }

  private:
    double smoothstep(double t) const; // 0 at t<=0, 1 at t>=1
    std::string profile_;
    bool exp_profile_;
};

CutoffFamily build_cutoffs(const std::string& smoothness_profile = "exp");

} // namespace kg
