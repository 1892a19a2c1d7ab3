#pragma once

#include <vector>

#include "kglab/grid.hpp"

namespace kg {

// A field is stored spectrally: coeffs[(i,j,q)] is the coefficient of
// exp(i(xi . x + n y)) in the trigonometric interpolant, with xi and n read
// off the grid's index maps. Physical samples are plain vectors produced on
// demand by the transform layer.
struct Field {
    GridSpec grid;
    std::vector<cplx> coeffs;

    Field() = default;
    explicit Field(const GridSpec& g) : grid(g), coeffs(g.size(), cplx(0.0, 0.0)) {
        grid.validate();
    }

    void require_same_grid(const Field& other, const char* op) const {
        if (!(grid == other.grid))
            throw ContractViolation(std::string(op) + ": fields live on different grids");
    }
};

inline Field& operator+=(Field& a, const Field& b) {
    a.require_same_grid(b, "field add");
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) a.coeffs[i] += b.coeffs[i];
    return a;
}

inline Field& operator-=(Field& a, const Field& b) {
    a.require_same_grid(b, "field sub");
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) a.coeffs[i] -= b.coeffs[i];
    return a;
}

inline Field& operator*=(Field& a, cplx s) {
    for (auto& c : a.coeffs) c *= s;
    return a;
}

inline Field operator+(Field a, const Field& b) { a += b; return a; }
inline Field operator-(Field a, const Field& b) { a -= b; return a; }
inline Field operator*(cplx s, Field a) { a *= s; return a; }

// axpy: y += alpha * x, no temporaries.
inline void add_scaled(Field& y, cplx alpha, const Field& x) {
    y.require_same_grid(x, "add_scaled");
    for (std::size_t i = 0; i < y.coeffs.size(); ++i) y.coeffs[i] += alpha * x.coeffs[i];
}

} // namespace kg
