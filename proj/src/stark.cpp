#include "toqc/stark.hpp"

#include <cmath>

namespace toqc::stark {

namespace {
const cplx kI(0.0, 1.0);
}

Mat2 dc_hamiltonian(const DcStarkParams& p) {
    const cplx off = p.V * std::exp(-kI * p.phi);
    return {p.E + p.Delta, off, std::conj(off), p.E - p.Delta};
}

DcEigensystem dc_eigensystem(const DcStarkParams& p) {
    const double omega = p.rabi();
    if (omega == 0.0) {
        // Fully degenerate: H = E*1, any frame diagonalises it.
        return {Mat2::identity(), Mat2::diag(p.E, p.E)};
    }
    const EigResult e = eig_hermitian2(dc_hamiltonian(p));
    return {e.w, Mat2::diag(e.lambda1, e.lambda2)};
}

Mat2 dc_propagator(const DcStarkParams& p, double t) {
    return expm2(cplx(0.0, -t) * dc_hamiltonian(p));
}

Mat2 dc_propagator_printed(const DcStarkParams& p, double t) {
    const double omega = p.rabi();
    const double c = std::cos(omega * t);
    // sin(Omega t)/Omega with the removable singularity at Omega = 0
    const double s = (omega < 1e-12) ? t : std::sin(omega * t) / omega;
    const cplx e_phi = std::exp(kI * p.phi);
    return {c - kI * p.Delta * s, -kI * p.V * s / e_phi,
            kI * p.V * s * e_phi, c + kI * p.Delta * s};
}

Mat2 ac_hamiltonian(const AcStarkParams& p, double t) {
    const cplx off = p.V * std::cos(p.omega_drive * t) * std::exp(-kI * p.phi);
    return {p.E, off, std::conj(off), -p.E};
}

AcEigensystem ac_eigensystem(const AcStarkParams& p, double t) {
    const double vc = p.V * std::cos(p.omega_drive * t);
    const double lam2 = p.E * p.E + vc * vc;
    if (lam2 <= 1e-24)
        throw std::domain_error(
            "ac_eigensystem: degenerate instant (E = 0 and cos(w t) = 0)");
    const EigResult e = eig_hermitian2(ac_hamiltonian(p, t));
    return {e.w, std::sqrt(lam2)};
}

}  // namespace toqc::stark
