#pragma once

// Constant-matrix conjugation algebra: the T/S/V/Z/Y catalog, transformed
// systems and propagators, the constraint-image table, and the claim ledger
// that checks every printed identity against direct evaluation.

#include <optional>
#include <string>
#include <vector>

#include "toqc/brach.hpp"
#include "toqc/cmat.hpp"

namespace toqc::frames {

using brach::ControlSystem;
using brach::OptimalQubitParams;

// A named constant invertible matrix with its exact inverse.
struct FrameTransform {
    std::string name;
    Mat2 q;
    Mat2 qinv;
};

// The fixed catalog: T, S, V, Z, Y = Z*S and their inverses.
const std::vector<FrameTransform>& catalog();

// Lookup by name ("T", "Tinv", "S", "Sinv", "V", "Z", "Y", "1"); throws on
// unknown names.
const FrameTransform& frame(const std::string& name);

inline Mat2 conjugate(const FrameTransform& q, const Mat2& m) {
    return q.q * m * q.qinv;
}

// Q H Q^-1, Q F Q^-1, same k.
ControlSystem transform_system(const FrameTransform& q, const ControlSystem& sys);

// Closed-form transformed propagators U_Q(phi), phi = omega (t - s), for
// Q in {1, T, Tinv, S, Sinv, V}. Each equals conjugate(Q, eigenframe
// propagator).
Mat2 transformed_propagator(const std::string& q_name, const OptimalQubitParams& p,
                            double t, double s);

// A signed Pauli axis, the image of the constraint under conjugation.
struct SignedPauli {
    double sign;  // +1 or -1
    char axis;    // 'x', 'y' or 'z'

    Mat2 matrix(double omega_scale) const;
    std::string label() const;
};

// Image of Omega sigma_z under Q in {T, Tinv, S, Sinv, V} (identity maps to
// +sigma_z).
SignedPauli constraint_image(const std::string& q_name);

enum class ClaimStatus { Holds, Deviates };

// One printed identity as evaluable left/right sides plus a sampling plan.
struct IdentityClaim {
    std::string id;
    std::string anchor;  // where the identity is printed in the source text
    brach::Generator lhs;
    brach::Generator rhs;
    std::vector<double> sample_times;
    ClaimStatus expected;     // fixed ahead of time by the oracle run
    double tol_override = 0;  // > 0 replaces the caller tolerance (finite-
                              // difference and integrator-backed claims)
};

enum class VerdictStatus { Pass, Deviate, Error };

struct Verdict {
    VerdictStatus status;
    double max_residual = 0.0;
    std::size_t sample_count = 0;
    std::string detail;  // offending time on evaluation failure
};

inline const char* to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Pass: return "pass";
        case VerdictStatus::Deviate: return "deviate";
        default: return "error";
    }
}

// Max entrywise |lhs - rhs| over the sample grid; pass iff <= tol.
Verdict verify_identity(const IdentityClaim& claim, double tol);

// The fixed claim set for the transformation algebra: braiding relations,
// eigenmatrix conjugations, propagator reconstructions and Hamiltonian
// transport. Deviating eigenmatrix claims that a single column swap or sign
// flip repairs get a companion "repaired" entry.
std::vector<IdentityClaim> identity_ledger(const OptimalQubitParams& p);

}  // namespace toqc::frames
