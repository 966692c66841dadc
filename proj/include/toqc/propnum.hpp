#pragma once

// Numerical propagation oracles: the time-ordered Schroedinger propagator by
// adaptive fourth-order commutator-free Magnus substeps, the naive integral
// exponential, and propagator comparison metrics.

#include "toqc/brach.hpp"
#include "toqc/cmat.hpp"

namespace toqc::propnum {

using brach::Generator;

struct IntegratorConfig {
    double initial_step = 0.0;   // <= 0 means (t1 - t0) / 256
    double tolerance = 1e-10;    // local error budget per unit time
    long max_steps = 1000000;
};

struct PropagationResult {
    Mat2 u;
    double unitarity_drift = 0.0;  // ||U U^dag - 1||_max, rounding only
    long steps_taken = 0;
    bool accepted = true;
};

// Solves i dU/dt = H(t) U, U(t0) = 1, composing commutator-free Magnus
// substeps; each substep is exactly unitary, local error is estimated by
// step doubling.
PropagationResult schrodinger_propagate(const Generator& h, double t0, double t1,
                                        const IntegratorConfig& cfg = {});

// expm2(-i Int H dtau) with the integral by composite Simpson quadrature.
// Coincides with the time-ordered propagator only when the H(t) commute.
Mat2 naive_integral_exponential(const Generator& h, double t0, double t1,
                                int quad_steps = 512);

struct PropagatorComparison {
    double max_abs_diff;
    double phase_insensitive_distance;  // 1 - gate fidelity
};

PropagatorComparison compare_propagators(const Mat2& a, const Mat2& b);

}  // namespace toqc::propnum
