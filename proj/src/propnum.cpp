#include "toqc/propnum.hpp"

#include <cmath>
#include <limits>

namespace toqc::propnum {

namespace {

const cplx kI(0.0, 1.0);

// One fourth-order commutator-free Magnus substep over [t, t+h]: two
// exponential factors built from H at the Gauss nodes. Each exponent is a
// real combination of Hermitian samples times -i, so every factor is
// exactly unitary.
Mat2 substep(const Generator& h, double t, double step) {
    const double root3_6 = std::sqrt(3.0) / 6.0;
    const Mat2 h1 = h(t + (0.5 - root3_6) * step);
    const Mat2 h2 = h(t + (0.5 + root3_6) * step);
    const double a1 = 0.25 + root3_6;
    const double a2 = 0.25 - root3_6;
    return expm2(cplx(0.0, -step) * (a2 * h1 + a1 * h2)) *
           expm2(cplx(0.0, -step) * (a1 * h1 + a2 * h2));
}

}  // namespace

PropagationResult schrodinger_propagate(const Generator& ham, double t0, double t1,
                                        const IntegratorConfig& cfg) {
    if (cfg.tolerance <= 0.0 || cfg.max_steps <= 0)
        throw std::invalid_argument("schrodinger_propagate: bad integrator config");

    PropagationResult res;
    res.u = Mat2::identity();

    const double span = std::abs(t1 - t0);
    if (span == 0.0) return res;
    const double dir = (t1 >= t0) ? 1.0 : -1.0;

    double h = (cfg.initial_step > 0.0) ? cfg.initial_step : span / 256.0;
    double t = t0;

    while (dir * (t1 - t) > 1e-15 * span) {
        const double hs = std::min(h, std::abs(t1 - t));
        const double hd = dir * hs;

        if (++res.steps_taken > cfg.max_steps) {
            res.accepted = false;
            break;
        }

        const Mat2 full = substep(ham, t, hd);
        const Mat2 fine = substep(ham, t + 0.5 * hd, 0.5 * hd) * substep(ham, t, 0.5 * hd);
        const double err = max_abs_diff(full, fine);
        // the error estimate bottoms out at rounding noise; without the floor
        // a very tight budget would halve the step forever
        const double floor = 64.0 * std::numeric_limits<double>::epsilon();
        const double budget = std::max(cfg.tolerance * hs / span, floor);

        if (err <= budget) {
            res.u = fine * res.u;
            t += hd;
            if (err < budget / 16.0) h *= 2.0;
        } else {
            h = 0.5 * hs;
        }
    }

    res.unitarity_drift = unitarity_residual(res.u);
    return res;
}

Mat2 naive_integral_exponential(const Generator& ham, double t0, double t1,
                                int quad_steps) {
    if (quad_steps < 2)
        throw std::invalid_argument("naive_integral_exponential: quad_steps >= 2");
    int n = quad_steps;
    if (n % 2 != 0) ++n;  // Simpson needs an even panel count

    const double h = (t1 - t0) / n;
    Mat2 acc = ham(t0) + ham(t1);
    for (int j = 1; j < n; ++j) {
        const double w = (j % 2 == 1) ? 4.0 : 2.0;
        acc = acc + w * ham(t0 + j * h);
    }
    const Mat2 integral = (h / 3.0) * acc;
    return expm2(cplx(0.0, -1.0) * integral);
}

PropagatorComparison compare_propagators(const Mat2& a, const Mat2& b) {
    // Phase-insensitive distance computed directly from the trace overlap so
    // no unitarity precondition is imposed here.
    const double fid = 0.5 * std::abs((a.dagger() * b).trace());
    return {max_abs_diff(a, b), 1.0 - fid};
}

}  // namespace toqc::propnum
