#include "kglab/bessel.hpp"

#include <cmath>

namespace kg {

namespace {
constexpr double pi_ = 3.141592653589793238462643383279502884;
}

double bessel_j0(double z) {
    z = std::fabs(z);
    if (z <= 12.0) {
        // sum_k (-1)^k (z/2)^{2k} / (k!)^2
        double q = 0.25 * z * z;
        double term = 1.0, sum = 1.0;
        for (int k = 1; k <= 60; ++k) {
            term *= -q / (double(k) * k);
            sum += term;
            if (std::fabs(term) < 1e-18 * (1.0 + std::fabs(sum))) break;
        }
        return sum;
    }
    // Hankel expansion: J0 = sqrt(2/(pi z)) [P cos(z - pi/4) - Q sin(z - pi/4)]
    // with P, Q summed to their smallest term.
    double p = 1.0, q = 0.0;
    double term = 1.0;
    double prev = 1.0;
    for (int k = 1; k <= 24; ++k) {
        double odd = 2.0 * k - 1.0;
        term *= -odd * odd / (8.0 * k * z) * ((k % 2) ? 1.0 : -1.0);
        // term now carries magnitude prod (2j-1)^2 / (k! (8z)^k) and the
        // sign pattern +,-,-,+,+,-,-,... split between P and Q below.
        double mag = std::fabs(term);
        if (mag > prev) break; // asymptotic series started diverging
        prev = mag;
        if (k % 2)
            q += term;
        else
            p += term;
        if (mag < 1e-17) break;
    }
    double w = z - 0.25 * pi_;
    return std::sqrt(2.0 / (pi_ * z)) * (p * std::cos(w) - q * std::sin(w));
}

double bessel_j0_reference(double z) {
    z = std::fabs(z);
    // start with enough points to see the oscillation, then refine
    int n = 16;
    while (n < 4.0 * z) n *= 2;
    auto trap = [&](int m) {
        double h = pi_ / m;
        double s = 0.5 * (1.0 + std::cos(z * std::sin(pi_)));
        for (int i = 1; i < m; ++i) s += std::cos(z * std::sin(i * h));
        return s * h / pi_;
    };
    double prev = trap(n);
    for (int round = 0; round < 24; ++round) {
        n *= 2;
        double cur = trap(n);
        if (std::fabs(cur - prev) < 1e-15) return cur;
        prev = cur;
    }
    return prev;
}

} // namespace kg
