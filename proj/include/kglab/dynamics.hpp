#pragma once

#include <utility>

#include "kglab/field.hpp"
#include "kglab/nonlinearity.hpp"

namespace kg {

// Normalized first-order variable U = du/dt - i Lam u at time t.
struct StateU {
    Field U;
    double t = 0.0;
};

// Builds U from real-valued (u0, u1); throws ContractViolation if either
// input has a complex-valued physical part.
StateU normalize_initial_data(const Field& u0, const Field& u1);

// Recovers (u, udot) spectra: u = i(U - U~)/(2 Lam), udot = (U + U~)/2 with
// U~ the conjugate reflection.
std::pair<Field, Field> unpack_state(const StateU& s);

// Interaction-picture 4th-order integrator for dU/dt + i Lam U = F(u, du,
// ddu): the linear phase is applied exactly, the quadratic terms by a
// classical RK4 in the rotated frame.  With all coefficients zero a step is
// exactly the propagator.
class Stepper {
  public:
    Stepper(const GridSpec& grid, const NonlinearityCoeffs& coeffs);

    // Documented stability/accuracy budget for one step.
    double h_max() const;

    // Advance by h <= h_max; throws NumericalFailure on detected blow-up
    // (one-step norm growth beyond 10x).
    void step(StateU& s, double h);

    // V = e^{+it Lam} U, constant in time for the linear flow.
    Field profile(const StateU& s) const;

    // Right-hand side in the normalized variable (the nonlinearity evaluated
    // on the unpacked state); exposed for order-verification tests.
    Field rhs(const Field& U);

  private:
    GridSpec grid_;
    NonlinearityCoeffs coeffs_;
    NonlinearityEvaluator eval_;
    bool linear_ = false;
};

} // namespace kg
