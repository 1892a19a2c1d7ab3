#pragma once

#include <vector>

#include "kglab/field.hpp"
#include "kglab/nonlinearity.hpp"

namespace kg {

// One factor of a bilinear symbol term: c(sign) * zeta1^e1 zeta2^e2 zeta3^e3
// * Lambda(zeta)^lam_pow, evaluated on the frequency (zeta1, zeta2) with
// transverse integer zeta3.  Slot A receives (xi - eta, n - m) with sign mu,
// slot B receives (eta, m) with sign nu.
struct SlotSymbol {
    int e1 = 0, e2 = 0, e3 = 0;
    int lam_pow = 0; // 0 or -1
    cplx c_plus{0.0, 0.0};
    cplx c_minus{0.0, 0.0};

    cplx eval(double z1, double z2, double z3, int sign) const;
    int degree() const { return e1 + e2 + e3; }
};

struct BilinearTerm {
    SlotSymbol a;
    SlotSymbol b;
};

// The full quadratic interaction symbol: for each channel (mu, nu),
// M(xi, eta, n, m) = sum_terms a(xi-eta, n-m; mu) * b(eta, m; nu).
struct MultiplierSymbol {
    std::vector<BilinearTerm> terms;

    cplx eval_channel(double xi1, double xi2, double eta1, double eta2, int n,
                      int m, int mu, int nu) const;
    bool empty() const { return terms.empty(); }
};

// Machine-derived from the coefficient arrays by substituting the half-wave
// dictionary u^ = i(U+ - U-)/(2 Lam), du/dt^ = (U+ + U-)/2 into the Fourier
// form of the nonlinearity.  Never hand-transcribed.
MultiplierSymbol multiplier_symbols(const NonlinearityCoeffs& coeffs);

// Checks every term factor against the admissible structural family:
// slot A in {const} u {deg<=1 over Lambda}; slot B additionally allows the
// second-derivative factors {deg<=2 over Lambda} and the bare first-degree
// factor from the mixed time-space derivative.
bool symbols_in_family(const MultiplierSymbol& M);

// Spectral assembly of the quadratic evolution right-hand side from the
// normalized variable: sums the four (mu, nu) channels as dealiased
// convolutions.  Matches the physical-space assembly to round-off.
Field bilinear_rhs(const MultiplierSymbol& M, const Field& U);

} // namespace kg
