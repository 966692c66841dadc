#pragma once

// SU(2) -> SO(3) adjoint representation: the 3x3 real rotation a unitary
// induces on the Pauli vector.

#include <array>

#include "toqc/cmat.hpp"

namespace toqc::adjrep {

// Row-major 3x3 real matrix, indices ordered (x, y, z).
using Rot3 = std::array<std::array<double, 3>, 3>;

Rot3 rot3_identity();
Rot3 rot3_mul(const Rot3& a, const Rot3& b);
double rot3_max_abs_diff(const Rot3& a, const Rot3& b);
double rot3_orthogonality_residual(const Rot3& r);
double rot3_det(const Rot3& r);

// R_ij = Tr(sigma_j U sigma_i U^dag) / 2; insensitive to the global phase
// of U. Rejects non-unitary input.
Rot3 adjoint_matrix(const Mat2& u, double unitary_tol = 1e-10);

}  // namespace toqc::adjrep
