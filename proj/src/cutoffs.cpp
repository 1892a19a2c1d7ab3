#include "kglab/cutoffs.hpp"

#include <cmath>

namespace kg {

CutoffFamily::CutoffFamily(std::string profile) : profile_(std::move(profile)) {
    if (profile_ == "exp")
        exp_profile_ = true;
    else if (profile_ == "poly9")
        exp_profile_ = false;
    else
        throw ContractViolation("cutoffs: unknown smoothness profile '" + profile_ + "'");
}

double CutoffFamily::smoothstep(double t) const {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    if (exp_profile_) {
        double a = std::exp(-1.0 / t);
        double b = std::exp(-1.0 / (1.0 - t));
        return a / (a + b);
    }
    // Ninth-order smootherstep; derivative 630 t^4 (1-t)^4, so C4 at both ends.
    double t5 = t * t * t * t * t;
    return t5 * (126.0 + t * (-420.0 + t * (540.0 + t * (-315.0 + t * 70.0))));
}

double CutoffFamily::bump(double r) const {
    double a = std::abs(r);
    if (a <= plateau_end) return 1.0;
    if (a >= support_end) return 0.0;
    return smoothstep((support_end - a) / (support_end - plateau_end));
}

double CutoffFamily::shell(int k, double r) const {
    return bump(std::ldexp(std::abs(r), -k)) - bump(std::ldexp(std::abs(r), 1 - k));
}

double CutoffFamily::ring(int l, double r) const {
    if (l < -1) throw ContractViolation("cutoffs: ring index must be >= -1");
    if (l == -1) return bump(2.0 * std::abs(r));
    return shell(l, r);
}

double CutoffFamily::ring_interval(int a, int b, double r) const {
    if (a < -1 || b < a) throw ContractViolation("cutoffs: bad ring interval");
    double high = bump(std::ldexp(std::abs(r), -b));
    if (a == -1) return high;
    return high - bump(std::ldexp(std::abs(r), 1 - a));
}

double CutoffFamily::shell_interval(int a, int b, double r) const {
    if (b < a) throw ContractViolation("cutoffs: bad shell interval");
    return bump(std::ldexp(std::abs(r), -b)) - bump(std::ldexp(std::abs(r), 1 - a));
}

CutoffFamily build_cutoffs(const std::string& smoothness_profile) {
    return CutoffFamily(smoothness_profile);
}

} // namespace kg
