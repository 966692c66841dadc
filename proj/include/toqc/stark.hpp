#pragma once

// DC and AC Stark two-level systems: Hamiltonians, eigensystems and the
// closed-form DC propagator.

#include "toqc/cmat.hpp"

namespace toqc::stark {

struct DcStarkParams {
    double E = 0.0;      // energy offset
    double Delta = 0.0;  // detuning
    double V = 0.0;      // coupling magnitude
    double phi = 0.0;    // coupling phase, radians

    double rabi() const { return std::sqrt(Delta * Delta + V * V); }
};

struct AcStarkParams {
    double E = 0.0;
    double V = 0.0;
    double phi = 0.0;
    double omega_drive = 1.0;  // > 0
};

// [[E+Delta, V e^{-i phi}], [V e^{i phi}, E-Delta]]
Mat2 dc_hamiltonian(const DcStarkParams& p);

struct DcEigensystem {
    Mat2 w;  // orthonormal eigenvector columns
    Mat2 l;  // diag(E+Omega, E-Omega)
};

DcEigensystem dc_eigensystem(const DcStarkParams& p);

// exp(-i H t) = e^{-iEt} (cos(Omega t) 1 - i sin(Omega t)/Omega n.sigma).
// Unitary by construction; the textbook-style compact matrix without the
// global phase and with the lower-left sign flipped is available from
// dc_propagator_printed for residual reporting.
Mat2 dc_propagator(const DcStarkParams& p, double t);

// The compact printed form as stated (no e^{-iEt}, +i V e^{i phi} sin
// lower-left). Not unitary in general; kept for the claim ledger.
Mat2 dc_propagator_printed(const DcStarkParams& p, double t);

// [[E, V e^{-i phi} cos(w t)], [V e^{i phi} cos(w t), -E]]
Mat2 ac_hamiltonian(const AcStarkParams& p, double t);

struct AcEigensystem {
    Mat2 w;         // instantaneous eigenvectors
    double lambda;  // eigenvalues are +/- lambda
};

// Instantaneous eigensystem; rejects the degenerate instant E = 0 with
// cos(w t) = 0.
AcEigensystem ac_eigensystem(const AcStarkParams& p, double t);

}  // namespace toqc::stark
