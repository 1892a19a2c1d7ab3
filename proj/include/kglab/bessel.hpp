#pragma once

namespace kg {

// J0, split at |z| = 12 between the ascending series and the Hankel
// asymptotic expansion; absolute error below ~5e-13 on either branch.
double bessel_j0(double z);

// Independent slow reference: trapezoid rule on the integral representation
// (1/pi) * int_0^pi cos(z sin theta) dtheta, refined to convergence.  The
// integrand extends to a smooth pi-periodic function, so the trapezoid rule
// converges geometrically.
double bessel_j0_reference(double z);

} // namespace kg
