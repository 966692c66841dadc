#include "toqc/brach.hpp"

#include <cmath>

namespace toqc::brach {

namespace {
const cplx kI(0.0, 1.0);
}

Mat2 brach_residual(const ControlSystem& sys, double t, double h) {
    if (h <= 0.0) throw std::invalid_argument("brach_residual: h must be positive");
    auto sum = [&](double tau) { return sys.hamiltonian(tau) + sys.constraint(tau); };
    const Mat2 ddt = (1.0 / (2.0 * h)) * (sum(t + h) - sum(t - h));
    return kI * ddt - commutator(sys.hamiltonian(t), sys.constraint(t));
}

TraceConstraints trace_constraints(const ControlSystem& sys, double t) {
    const Mat2 h = sys.hamiltonian(t);
    const Mat2 f = sys.constraint(t);
    return {(h * f).trace().real(), 0.5 * (h * h).trace().real()};
}

double energy_dispersion(const QubitState& psi, const Mat2& h) {
    const double norm = std::norm(psi.c0) + std::norm(psi.c1);
    if (std::abs(norm - 1.0) > 1e-12)
        throw std::invalid_argument("energy_dispersion: state not normalized");
    if (hermiticity_residual(h) > 1e-12)
        throw std::invalid_argument("energy_dispersion: H not Hermitian");

    auto expect = [&](const Mat2& a) {
        const cplx w0 = a.a11 * psi.c0 + a.a12 * psi.c1;
        const cplx w1 = a.a21 * psi.c0 + a.a22 * psi.c1;
        return (std::conj(psi.c0) * w0 + std::conj(psi.c1) * w1).real();
    };

    const double mean = expect(h);
    double var = expect(h * h) - mean * mean;
    if (var < 0.0) {
        if (var < -1e-12)
            throw std::domain_error("energy_dispersion: negative variance " +
                                    std::to_string(var));
        var = 0.0;
    }
    return std::sqrt(var);
}

Mat2 optimal_hamiltonian(const OptimalQubitParams& p, double t) {
    const cplx e = std::exp(2.0 * kI * p.omega * t);
    return {0.0, p.R * e, p.R * std::conj(e), 0.0};
}

Mat2 optimal_eigenmatrix(const OptimalQubitParams& p, double t) {
    const double r = 1.0 / std::sqrt(2.0);
    const cplx e = std::exp(2.0 * kI * p.omega * t);
    return {r * e, -r * e, r, r};
}

Mat2 eigenframe_propagator(const OptimalQubitParams& p, double t, double s) {
    const cplx phase = std::exp(2.0 * kI * p.omega * (t - s));
    return Mat2::diag(phase, 1.0);
}

Mat2 eigenmatrix_ode_residual(const OptimalQubitParams& p, double t, double h) {
    if (h <= 0.0)
        throw std::invalid_argument("eigenmatrix_ode_residual: h must be positive");
    const Mat2 dw =
        (1.0 / (2.0 * h)) * (optimal_eigenmatrix(p, t + h) - optimal_eigenmatrix(p, t - h));
    return kI * dw - optimal_hamiltonian(p, t) * optimal_eigenmatrix(p, t);
}

ControlSystem optimal_system(const OptimalQubitParams& p) {
    ControlSystem sys;
    sys.hamiltonian = [p](double t) { return optimal_hamiltonian(p, t); };
    sys.constraint = [p](double) { return p.Omega * sigma_z(); };
    sys.k = p.R * p.R;
    return sys;
}

}  // namespace toqc::brach
