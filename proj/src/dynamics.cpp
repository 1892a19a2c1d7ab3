#include "kglab/dynamics.hpp"

#include <cmath>
#include <sstream>

#include "kglab/spectral.hpp"

namespace kg {

namespace {

void require_real(const Field& f, const char* what) {
    double n = l2_norm(f);
    if (n == 0.0) return;
    Field sym = hermitian_part(f);
    if (l2_norm(f - sym) > 1e-10 * n) {
        std::ostringstream os;
        os << "normalize_initial_data: " << what << " is not real-valued";
        throw ContractViolation(os.str());
    }
}

} // namespace

StateU normalize_initial_data(const Field& u0, const Field& u1) {
    u0.require_same_grid(u1, "normalize_initial_data");
    require_real(u0, "u0");
    require_real(u1, "u1");
    StateU s{u1 - cplx(0.0, 1.0) * apply_lambda(u0, 1.0), 0.0};
    return s;
}

std::pair<Field, Field> unpack_state(const StateU& s) {
    Field refl = conj_reflect(s.U);
    Field u = cplx(0.0, 0.5) * apply_lambda(s.U - refl, -1.0);
    Field udot = cplx(0.5, 0.0) * (s.U + refl);
    return {std::move(u), std::move(udot)};
}

Stepper::Stepper(const GridSpec& grid, const NonlinearityCoeffs& coeffs)
    : grid_(grid), coeffs_(coeffs), eval_(grid, coeffs),
      linear_(coeffs.all_zero()) {}

double Stepper::h_max() const {
    double xi = grid_.xi_max();
    double lam_top =
        lambda_symbol(xi, xi, static_cast<double>(grid_.mode_cutoff));
    return std::min(0.75, 8.0 / lam_top);
}

Field Stepper::rhs(const Field& U) {
    Field refl = conj_reflect(U);
    Field u = cplx(0.0, 0.5) * apply_lambda(U - refl, -1.0);
    Field udot = cplx(0.5, 0.0) * (U + refl);
    return eval_.evaluate(u, udot);
}

void Stepper::step(StateU& s, double h) {
    if (s.U.grid != grid_)
        throw ContractViolation("step: state grid does not match the stepper");
    if (!(h > 0.0) || h > h_max())
        throw ContractViolation("step: h must lie in (0, h_max]");

    if (linear_) {
        s.U = propagate(s.U, h, -1);
        s.t += h;
        return;
    }

    double before = l2_norm(s.U);

    Field n1 = rhs(s.U);
    Field a2 = s.U;
    add_scaled(a2, cplx(0.5 * h, 0.0), n1);
    Field n2 = rhs(propagate(a2, 0.5 * h, -1));
    Field a3 = propagate(s.U, 0.5 * h, -1);
    add_scaled(a3, cplx(0.5 * h, 0.0), n2);
    Field n3 = rhs(a3);
    Field eu = propagate(s.U, h, -1);
    Field a4 = eu;
    add_scaled(a4, cplx(h, 0.0), propagate(n3, 0.5 * h, -1));
    Field n4 = rhs(a4);

    Field next = eu;
    add_scaled(next, cplx(h / 6.0, 0.0), propagate(n1, h, -1));
    add_scaled(next, cplx(h / 3.0, 0.0), propagate(n2, 0.5 * h, -1));
    add_scaled(next, cplx(h / 3.0, 0.0), propagate(n3, 0.5 * h, -1));
    add_scaled(next, cplx(h / 6.0, 0.0), n4);

    double after = l2_norm(next);
    if (after > 10.0 * before + 1e-300) {
        std::ostringstream os;
        os << "step: blow-up detected at t = " << s.t << " (norm " << before
           << " -> " << after << " in one step of h = " << h << ")";
        throw NumericalFailure(os.str());
    }
    s.U = std::move(next);
    s.t += h;
}

Field Stepper::profile(const StateU& s) const {
    return propagate(s.U, s.t, +1);
}

} // namespace kg
