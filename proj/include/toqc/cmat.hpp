#pragma once

// Closed-form complex 2x2 linear algebra: Pauli decomposition, matrix
// exponential via Cayley-Hamilton, Hermitian eigensystems, gate fidelity
// and pseudo-metric residuals.

#include <complex>
#include <stdexcept>
#include <string>

namespace toqc {

using cplx = std::complex<double>;

inline constexpr double kDefaultTol = 1e-12;

// 2x2 complex matrix, row major, value semantics.
struct Mat2 {
    cplx a11{}, a12{}, a21{}, a22{};

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 zero() { return {}; }
    static Mat2 diag(cplx d1, cplx d2) { return {d1, 0.0, 0.0, d2}; }

    Mat2 dagger() const {
        return {std::conj(a11), std::conj(a21), std::conj(a12), std::conj(a22)};
    }
    Mat2 transpose() const { return {a11, a21, a12, a22}; }
    Mat2 conjugated() const {
        return {std::conj(a11), std::conj(a12), std::conj(a21), std::conj(a22)};
    }
    cplx trace() const { return a11 + a22; }
    cplx det() const { return a11 * a22 - a12 * a21; }

    Mat2 inverse() const {
        const cplx d = det();
        if (std::abs(d) == 0.0)
            throw std::domain_error("Mat2::inverse: singular matrix");
        return {a22 / d, -a12 / d, -a21 / d, a11 / d};
    }

    bool is_finite() const {
        auto ok = [](cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };
        return ok(a11) && ok(a12) && ok(a21) && ok(a22);
    }
};

inline Mat2 operator+(const Mat2& a, const Mat2& b) {
    return {a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21, a.a22 + b.a22};
}
inline Mat2 operator-(const Mat2& a, const Mat2& b) {
    return {a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21, a.a22 - b.a22};
}
inline Mat2 operator-(const Mat2& a) { return {-a.a11, -a.a12, -a.a21, -a.a22}; }
inline Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
            a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
}
inline Mat2 operator*(cplx s, const Mat2& m) {
    return {s * m.a11, s * m.a12, s * m.a21, s * m.a22};
}
inline Mat2 operator*(const Mat2& m, cplx s) { return s * m; }
inline Mat2 operator*(double s, const Mat2& m) { return cplx(s, 0.0) * m; }

inline Mat2 sigma_x() { return {0.0, 1.0, 1.0, 0.0}; }
inline Mat2 sigma_y() { return {0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0}; }
inline Mat2 sigma_z() { return {1.0, 0.0, 0.0, -1.0}; }

// Largest entrywise modulus.
inline double max_abs(const Mat2& m) {
    double r = std::abs(m.a11);
    r = std::max(r, std::abs(m.a12));
    r = std::max(r, std::abs(m.a21));
    r = std::max(r, std::abs(m.a22));
    return r;
}

inline double max_abs_diff(const Mat2& a, const Mat2& b) { return max_abs(a - b); }

inline bool approx_equal(const Mat2& a, const Mat2& b, double tol = kDefaultTol) {
    return max_abs_diff(a, b) <= tol;
}

// ||M M^dag - 1||_max; zero for unitary M.
inline double unitarity_residual(const Mat2& m) {
    return max_abs_diff(m * m.dagger(), Mat2::identity());
}

inline double hermiticity_residual(const Mat2& m) { return max_abs_diff(m, m.dagger()); }

// M = a0*1 + ax*sx + ay*sy + az*sz. Coefficients are complex so the
// decomposition covers arbitrary matrices, not just Hermitian ones.
struct PauliDecomposition {
    cplx a0, ax, ay, az;
};

PauliDecomposition pauli_decompose(const Mat2& m);
Mat2 pauli_compose(const PauliDecomposition& d);

// exp(M) in closed form: exp(a0)(cosh(r) 1 + sinh(r)/r (M - a0 1)),
// r^2 = ax^2 + ay^2 + az^2, with a series branch as r -> 0.
Mat2 expm2(const Mat2& m);

struct EigResult {
    Mat2 w;          // unit-norm eigenvector columns
    double lambda1;  // descending
    double lambda2;
};

// Hermitian eigensystem with deterministic column phases (first nonzero
// component of each column real-positive). Rejects non-Hermitian input.
EigResult eig_hermitian2(const Mat2& m, double herm_tol = kDefaultTol);

inline Mat2 commutator(const Mat2& a, const Mat2& b) { return a * b - b * a; }

// |Tr(A^dag B)| / 2 for unitary A, B; insensitive to global phase.
double gate_fidelity(const Mat2& a, const Mat2& b, double unitary_tol = 1e-10);

// M eta M^dag - eta; zero iff M preserves the Hermitian form eta.
Mat2 metric_residual(const Mat2& m, const Mat2& eta);

}  // namespace toqc
