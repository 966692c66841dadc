#include "toqc/adjoint.hpp"

#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "toqc/brach.hpp"

using namespace toqc;
using namespace toqc::adjrep;

namespace {
const cplx I_(0.0, 1.0);
}

TEST_CASE("rot3 helpers") {
    const Rot3 id = rot3_identity();
    CHECK(rot3_max_abs_diff(rot3_mul(id, id), id) == 0.0);
    CHECK(rot3_orthogonality_residual(id) == 0.0);
    CHECK(rot3_det(id) == doctest::Approx(1.0));

    const Rot3 perm{{{0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}, {1.0, 0.0, 0.0}}};
    CHECK(rot3_det(perm) == doctest::Approx(1.0));
    CHECK(rot3_orthogonality_residual(perm) == 0.0);
    CHECK(rot3_max_abs_diff(rot3_mul(perm, perm), perm) == doctest::Approx(1.0));
}

TEST_CASE("adjoint of basic unitaries") {
    // identity and global phases map to the identity rotation
    CHECK(rot3_max_abs_diff(adjoint_matrix(Mat2::identity()), rot3_identity()) <= 1e-15);
    CHECK(rot3_max_abs_diff(adjoint_matrix(std::exp(I_ * 0.37) * Mat2::identity()),
                            rot3_identity()) <= 1e-14);

    // exp(-i theta/2 sigma_z): sigma_x -> cos(th) sigma_x + sin(th) sigma_y
    const double th = 0.9;
    const Mat2 u = Mat2::diag(std::exp(-I_ * th / 2.0), std::exp(I_ * th / 2.0));
    const Rot3 want{{{std::cos(th), std::sin(th), 0.0},
                     {-std::sin(th), std::cos(th), 0.0},
                     {0.0, 0.0, 1.0}}};
    CHECK(rot3_max_abs_diff(adjoint_matrix(u), want) <= 1e-14);

    // sigma_x conjugation flips y and z
    const Rot3 flip{{{1.0, 0.0, 0.0}, {0.0, -1.0, 0.0}, {0.0, 0.0, -1.0}}};
    CHECK(rot3_max_abs_diff(adjoint_matrix(sigma_x()), flip) <= 1e-15);
}

TEST_CASE("adjoint rejects non-unitary input") {
    CHECK_THROWS_AS(adjoint_matrix(2.0 * Mat2::identity()), std::invalid_argument);
    CHECK_THROWS_AS(adjoint_matrix(Mat2{1.0, 1.0, 0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("adjoint properties on random unitaries") {
    std::mt19937_64 rng(73);
    for (int k = 0; k < 300; ++k) {
        const Mat2 u = toqc::test::random_unitary(rng);
        const Mat2 v = toqc::test::random_unitary(rng);
        const Rot3 ru = adjoint_matrix(u);

        CHECK(rot3_orthogonality_residual(ru) <= 1e-11);
        CHECK(rot3_det(ru) == doctest::Approx(1.0).epsilon(1e-10));

        // composition: in the convention U sigma_i U^dag = sum_j R_ij sigma_j
        // the adjoint matrices compose in reversed order, R(UV) = R(V) R(U);
        // equivalently the transposed (Bloch-vector) action is a homomorphism
        CHECK(rot3_max_abs_diff(adjoint_matrix(u * v),
                                rot3_mul(adjoint_matrix(v), ru)) <= 1e-11);

        // global-phase invariance
        const double th = toqc::test::random_in(rng, 0.0, 6.28);
        CHECK(rot3_max_abs_diff(adjoint_matrix(std::exp(I_ * th) * u), ru) <= 1e-11);

        // defining relation: U sigma_i U^dag = sum_j R_ij sigma_j
        const Mat2 sig[3] = {sigma_x(), sigma_y(), sigma_z()};
        for (int i = 0; i < 3; ++i) {
            Mat2 rhs = Mat2::zero();
            for (int j = 0; j < 3; ++j) rhs = rhs + ru[i][j] * sig[j];
            CHECK(max_abs_diff(u * sig[i] * u.dagger(), rhs) <= 1e-11);
        }
    }
}

TEST_CASE("eigenframe propagator maps to the z-axis block rotation") {
    const brach::OptimalQubitParams p{1.0, 1.0, 1.0};
    std::mt19937_64 rng(79);
    for (int k = 0; k < 100; ++k) {
        const double t = toqc::test::random_in(rng, -4.0, 4.0);
        const double phi = p.omega * t;
        const double c = std::cos(2.0 * phi), s = std::sin(2.0 * phi);
        const Rot3 want{{{c, -s, 0.0}, {s, c, 0.0}, {0.0, 0.0, 1.0}}};
        CHECK(rot3_max_abs_diff(
                  adjoint_matrix(brach::eigenframe_propagator(p, t, 0.0)), want) <=
              1e-12);
    }
}
