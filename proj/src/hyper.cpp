#include "toqc/hyper.hpp"

#include <cmath>

namespace toqc::hyper {

namespace {
const cplx kI(0.0, 1.0);
}

Mat2 wick_hamiltonian(const HyperbolicParams& p, double t) {
    // cosh/sinh assembled from the exp(+-2wt) pair to control cancellation
    const double ep = std::exp(2.0 * p.omega * t);
    const double em = std::exp(-2.0 * p.omega * t);
    const double ch = 0.5 * (ep + em);
    const double sh = 0.5 * (ep - em);
    return {-p.R * ch, kI * p.R * sh, kI * p.R * sh, p.R * ch};
}

Mat2 hyper_propagator_unscaled(const HyperbolicParams& p, double t, double s) {
    const double tau = t - s;
    const double ch = std::cosh(p.omega * tau);
    const double sh = std::sinh(p.omega * tau);
    return {ch, kI * sh, -kI * sh, ch};
}

Mat2 hyper_propagator(const HyperbolicParams& p, double t, double s) {
    return std::exp(-p.omega * (t - s)) * hyper_propagator_unscaled(p, t, s);
}

Mat2 hyper_brach_residual(const HyperbolicParams& p, double Omega, double t,
                          double h) {
    if (h <= 0.0)
        throw std::invalid_argument("hyper_brach_residual: h must be positive");
    const Mat2 f = Omega * sigma_y();
    // F is constant, so d/dt(H + F) = dH/dt
    const Mat2 ddt =
        (1.0 / (2.0 * h)) * (wick_hamiltonian(p, t + h) - wick_hamiltonian(p, t - h));
    return -ddt - commutator(wick_hamiltonian(p, t), f);
}

double hyper_isotropy(const HyperbolicParams& p, double) {
    // H^2 = R^2 * 1 identically; the cosh^2 - sinh^2 cancellation is exact.
    return p.R * p.R;
}

double hyper_isotropy_entrywise(const HyperbolicParams& p, double t) {
    if (std::abs(2.0 * p.omega * t) > 300.0)
        throw std::overflow_error(
            "hyper_isotropy_entrywise: 2wt beyond representable cosh range");
    const Mat2 h = wick_hamiltonian(p, t);
    return 0.5 * (h * h).trace().real();
}

}  // namespace toqc::hyper
