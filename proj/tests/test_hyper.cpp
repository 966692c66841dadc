#include "toqc/hyper.hpp"

#include <cmath>

#include "doctest.h"
#include "oracles.hpp"

using namespace toqc;
using namespace toqc::hyper;

namespace {
const cplx I_(0.0, 1.0);
}

TEST_CASE("wick hamiltonian structure") {
    const HyperbolicParams p{1.3, 0.8};
    for (double t : {-1.5, 0.0, 0.4, 2.0}) {
        const Mat2 h = wick_hamiltonian(p, t);
        // squares to R^2 * identity
        CHECK(max_abs_diff(h * h, (p.R * p.R) * Mat2::identity()) <= 1e-11);
        CHECK(h.trace() == cplx(0.0, 0.0));
        // entries
        CHECK(h.a11.real() == doctest::Approx(-p.R * std::cosh(2.0 * p.omega * t)));
        CHECK(h.a12.imag() == doctest::Approx(p.R * std::sinh(2.0 * p.omega * t)));
        CHECK(max_abs_diff(h, h.transpose()) == 0.0);  // complex-symmetric, not Hermitian
    }
    // genuinely non-Hermitian away from t = 0
    CHECK(hermiticity_residual(wick_hamiltonian(p, 0.7)) > 1.0);
}

TEST_CASE("unscaled propagator is pseudo-unitary for sigma_z") {
    const HyperbolicParams p{1.0, 1.0};
    for (double t : {-2.0, -0.5, 0.0, 0.9, 3.0}) {
        const Mat2 u = hyper_propagator_unscaled(p, t, 0.0);
        CHECK(max_abs(metric_residual(u, canonical_metric())) <= 1e-12);
        CHECK(std::abs(u.det() - cplx(1.0, 0.0)) <= 1e-12);  // SU(1,1)
        CHECK(hermiticity_residual(u) == 0.0);
    }
    // but it is not unitary
    CHECK(unitarity_residual(hyper_propagator_unscaled(p, 1.0, 0.0)) > 1.0);
}

TEST_CASE("scaled propagator obeys the conformal metric law and composes") {
    const HyperbolicParams p{1.0, 0.7};
    const double t = 1.4, s = 0.2;
    const Mat2 m = hyper_propagator(p, t, s);
    const Mat2 want = std::exp(-2.0 * p.omega * (t - s)) * canonical_metric();
    CHECK(max_abs_diff(m * canonical_metric() * m.dagger(), want) <= 1e-12);

    CHECK(approx_equal(hyper_propagator(p, s, s), Mat2::identity(), 1e-15));
    const Mat2 comp = hyper_propagator(p, t, 0.8) * hyper_propagator(p, 0.8, s);
    CHECK(max_abs_diff(comp, hyper_propagator(p, t, s)) <= 1e-12);
}

TEST_CASE("hyperbolic governing equation: residual vanishes only at Omega = -omega") {
    const HyperbolicParams p{1.0, 1.0};
    std::mt19937_64 rng(83);
    for (int k = 0; k < 100; ++k) {
        const double t = toqc::test::random_in(rng, -1.5, 1.5);
        CHECK(max_abs(hyper_brach_residual(p, -p.omega, t)) <= 1e-6);
    }
    double worst = 0.0;
    for (double t : {0.0, 0.3, 1.0})
        worst = std::max(worst, max_abs(hyper_brach_residual(p, p.omega, t)));
    CHECK(worst > 1e-1);
    CHECK(max_abs(hyper_brach_residual(p, 0.0, 0.5)) > 1e-1);
    CHECK_THROWS_AS(hyper_brach_residual(p, 1.0, 0.0, -0.1), std::invalid_argument);
}

TEST_CASE("hyperbolic isotropy") {
    const HyperbolicParams p{1.7, 1.0};
    for (double t : {-10.0, -3.0, 0.0, 2.5, 10.0}) {
        CHECK(hyper_isotropy(p, t) == p.R * p.R);
        const double ch = std::cosh(2.0 * p.omega * t);
        CHECK(std::abs(hyper_isotropy_entrywise(p, t) - p.R * p.R) <=
              1e-12 * (1.0 + ch * ch));
    }
    // |2wt| <= 20 window at full precision
    for (double t = -10.0; t <= 10.0; t += 0.5)
        CHECK(std::abs(hyper_isotropy(p, t) - p.R * p.R) <= 1e-12);
    // entrywise route overflows gracefully
    CHECK_THROWS_AS(hyper_isotropy_entrywise(p, 200.0), std::overflow_error);
}
