#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "kglab/field.hpp"

namespace kg {

// Deterministic RNG. mt19937_64 output is pinned by the standard and the
// gaussian map below is explicit Box-Muller, so streams are reproducible
// across standard libraries, which the byte-identical report contract needs.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    double uniform() { // in [0,1)
        return (eng() >> 11) * 0x1.0p-53;
    }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    double gaussian() {
        double u1 = 0.0;
        do { u1 = uniform(); } while (u1 <= 0.0);
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * pi * u2);
    }
    cplx cgauss() { return cplx(gaussian(), gaussian()); }
    int integer(int lo, int hi) { // inclusive
        return lo + static_cast<int>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

// Random field with coefficients filled inside |s| <= band_fraction * nx/2,
// |n| <= band_fraction * K; Hermitian-symmetrized so physical values are real
// when real_valued is set. Normalized to unit L2 norm.
Field random_band_field(const GridSpec& grid, std::uint64_t seed,
                        double band_fraction = 0.5, bool real_valued = true);

// Smooth compact bump: gaussian envelope of width sigma in the plane times a
// low-mode circle profile, band-limited to the grid's dealias band at
// construction so products stay exact. Returns (u0, u1).
std::pair<Field, Field> gaussian_bump_data(const GridSpec& grid, double sigma);

} // namespace kg
