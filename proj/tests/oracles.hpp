#pragma once

// Test-only oracles, independent of the closed-form implementation paths
// they are used to check.

#include <random>

#include "toqc/cmat.hpp"

namespace toqc::test {

// Matrix exponential by scaling-and-squaring with a 16-term Taylor series.
inline Mat2 expm_series(const Mat2& m) {
    int squarings = 0;
    double scale = max_abs(m);
    while (scale > 0.5) {
        scale *= 0.5;
        ++squarings;
    }
    const double factor = 1.0 / static_cast<double>(1 << squarings);
    const Mat2 x = factor * m;

    Mat2 sum = Mat2::identity();
    Mat2 term = Mat2::identity();
    for (int k = 1; k <= 16; ++k) {
        term = (1.0 / k) * (term * x);
        sum = sum + term;
    }
    for (int k = 0; k < squarings; ++k) sum = sum * sum;
    return sum;
}

inline Mat2 random_hermitian(std::mt19937_64& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    const double a = u(rng), d = u(rng), re = u(rng), im = u(rng);
    return {a, cplx(re, -im), cplx(re, im), d};
}

inline Mat2 random_unitary(std::mt19937_64& rng) {
    return expm_series(cplx(0.0, -1.0) * random_hermitian(rng, 2.0));
}

inline double random_in(std::mt19937_64& rng, double a, double b) {
    return std::uniform_real_distribution<double>(a, b)(rng);
}

}  // namespace toqc::test
