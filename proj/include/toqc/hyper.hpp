#pragma once

// The hyperbolic (Wick-rotated) sector: pseudo-unitary propagators, the
// hyperbolic Hamiltonian, the sign-flipped governing equation with its
// Omega = -omega solution, and hyperbolic isotropy.

#include "toqc/cmat.hpp"

namespace toqc::hyper {

struct HyperbolicParams {
    double R = 1.0;
    double omega = 1.0;
};

// The Hermitian form preserved by the unscaled propagator; the unique such
// form up to scale.
inline Mat2 canonical_metric() { return sigma_z(); }

// R [[-cosh 2wt, i sinh 2wt], [i sinh 2wt, cosh 2wt]]; squares to R^2 * 1.
Mat2 wick_hamiltonian(const HyperbolicParams& p, double t);

// Scaled propagator e^{-w tau} [[cosh w tau, i sinh w tau],
// [-i sinh w tau, cosh w tau]], tau = t - s. Satisfies the composition law
// and the conformal metric relation M sigma_z M^dag = e^{-2 w tau} sigma_z.
Mat2 hyper_propagator(const HyperbolicParams& p, double t, double s);

// The unscaled SU(1,1) factor; exactly pseudo-unitary with respect to
// sigma_z.
Mat2 hyper_propagator_unscaled(const HyperbolicParams& p, double t, double s);

// -d/dt(H(t) + F) - [H(t), F] with F = Omega sigma_y, derivative by central
// difference; vanishes on the line Omega = -omega.
Mat2 hyper_brach_residual(const HyperbolicParams& p, double Omega, double t,
                          double h = 1e-4);

// Tr(H(t)^2)/2 = R^2 by exact cosh^2 - sinh^2 cancellation; the entrywise
// route is usable only while cosh(2wt) is representable.
double hyper_isotropy(const HyperbolicParams& p, double t);

// Entrywise evaluation of Tr(H(t)^2)/2 as a cross-check; throws once 2wt
// leaves the representable cosh range.
double hyper_isotropy_entrywise(const HyperbolicParams& p, double t);

}  // namespace toqc::hyper
