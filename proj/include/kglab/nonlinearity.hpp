#pragma once

#include <string>
#include <vector>

#include "kglab/field.hpp"

namespace kg {

// Quadratic quasilinear right-hand side
//   F(u, du, d2u) = sum_{j,k=0..3} G^{jk}(u, du) d2_{jk} u + Q(u, du)
// with G^{jk} = sum_l g[j][k][l] d_l u + h[j][k] u and Q = sum q[a][b] v_a v_b
// over v = (u, d_0 u, d_1 u, d_2 u, d_3 u). Derivative index 0 is time,
// 1 and 2 the plane, 3 the circle. G^{00} must vanish identically, which is
// what keeps every second derivative in F expressible from (u, udot) alone:
// d2_{0j} u = d_j udot and no d2_{00} u term survives.
struct NonlinearityCoeffs {
    double g[4][4][4] = {};
    double h[4][4] = {};
    double q[5][5] = {};

    void validate() const;
    bool all_zero() const;
    bool has_spatial_g() const; // any G^{jk} with j,k >= 1 nonzero

    // Convenience setters that keep the symmetry constraints in one place.
    void set_g(int j, int k, int l, double value);
    void set_h(int j, int k, double value);
    void set_q(int a, int b, double value);
};

// Named presets: "zero", "dtu2" (Q = (d_t u)^2), "u2" (Q = u^2), and "mixed"
// (genuine quasilinear terms on every derivative slot plus a mixed Q).
NonlinearityCoeffs preset_coeffs(const std::string& name);

// Evaluates F from spectral (u, udot). Inputs must be coefficients of real
// fields and the grid's dealias fraction must not exceed 2/3; every quadratic
// product is formed on the grid with spectra truncated to the dealias band
// before and after, so the result is alias-free.
class NonlinearityEvaluator {
  public:
    NonlinearityEvaluator(const GridSpec& grid, const NonlinearityCoeffs& coeffs);

    Field evaluate(const Field& u, const Field& udot);
    const NonlinearityCoeffs& coeffs() const { return coeffs_; }
    const GridSpec& grid() const { return grid_; }

  private:
    GridSpec grid_;
    NonlinearityCoeffs coeffs_;
    bool need_u_ = false;
    bool need_d_[4] = {};
    bool need_dd_[4][4] = {}; // j <= k only
};

Field evaluate_nonlinearity(const Field& u, const Field& udot,
                            const NonlinearityCoeffs& coeffs);

} // namespace kg
