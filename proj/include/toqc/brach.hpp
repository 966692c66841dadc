#pragma once

// Time-optimal control core: the governing equation residual, trace
// constraints, energy dispersion, the optimal qubit Hamiltonian, its
// eigenmatrix and the eigenframe propagator.

#include <functional>

#include "toqc/cmat.hpp"

namespace toqc::brach {

using Generator = std::function<Mat2(double)>;

// A pair of time-indexed Hermitian generators plus the isotropy constant.
struct ControlSystem {
    Generator hamiltonian;
    Generator constraint;
    double k = 0.0;
};

struct OptimalQubitParams {
    double R = 1.0;      // coupling amplitude
    double omega = 1.0;  // frame frequency
    double Omega = 1.0;  // constraint strength; the canonical choice is Omega = omega
};

struct QubitState {
    cplx c0, c1;
};

inline constexpr double kDefaultFdStep = 1e-4;

// i d/dt(H + F) - [H, F], the time-optimality condition; derivative by
// central difference with step h.
Mat2 brach_residual(const ControlSystem& sys, double t, double h = kDefaultFdStep);

struct TraceConstraints {
    double tr_hf;  // Tr(H F), orthogonality constraint
    double iso;    // Tr(H^2)/2, isotropy constraint
};

TraceConstraints trace_constraints(const ControlSystem& sys, double t);

// sqrt(<H^2> - <H>^2) for a normalized state; small negative round-off in
// the radicand is clamped to zero.
double energy_dispersion(const QubitState& psi, const Mat2& h);

// R [[0, e^{2iwt}], [e^{-2iwt}, 0]]
Mat2 optimal_hamiltonian(const OptimalQubitParams& p, double t);

// (1/sqrt2) [[e^{2iwt}, -e^{2iwt}], [1, 1]]; unitary, diagonalises the
// optimal Hamiltonian to R sigma_z.
Mat2 optimal_eigenmatrix(const OptimalQubitParams& p, double t);

// W(t) W^dag(s) = diag(e^{2i phi}, 1), phi = w(t-s).
Mat2 eigenframe_propagator(const OptimalQubitParams& p, double t, double s);

// i dW/dt - H_opt(t) W(t) by central difference; nonzero for this family,
// returned verbatim for the claim ledger.
Mat2 eigenmatrix_ode_residual(const OptimalQubitParams& p, double t,
                              double h = kDefaultFdStep);

// The ControlSystem realising the optimal solution with F = Omega sigma_z.
ControlSystem optimal_system(const OptimalQubitParams& p);

}  // namespace toqc::brach
