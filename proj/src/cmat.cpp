#include "toqc/cmat.hpp"

#include <cmath>

namespace toqc {

namespace {

void require_finite(const Mat2& m, const char* where) {
    if (!m.is_finite())
        throw std::invalid_argument(std::string(where) + ": non-finite entry");
}

}  // namespace

PauliDecomposition pauli_decompose(const Mat2& m) {
    require_finite(m, "pauli_decompose");
    PauliDecomposition d;
    d.a0 = 0.5 * (m.a11 + m.a22);
    d.az = 0.5 * (m.a11 - m.a22);
    d.ax = 0.5 * (m.a12 + m.a21);
    d.ay = 0.5 * cplx(0.0, 1.0) * (m.a12 - m.a21);
    return d;
}

Mat2 pauli_compose(const PauliDecomposition& d) {
    const cplx i(0.0, 1.0);
    return {d.a0 + d.az, d.ax - i * d.ay, d.ax + i * d.ay, d.a0 - d.az};
}

Mat2 expm2(const Mat2& m) {
    require_finite(m, "expm2");
    const PauliDecomposition d = pauli_decompose(m);
    const cplx r2 = d.ax * d.ax + d.ay * d.ay + d.az * d.az;
    const cplx r = std::sqrt(r2);

    // sinh(r)/r, with the truncated series limit near r = 0 to avoid
    // cancellation in the quotient.
    cplx sinc_h;
    cplx cosh_r;
    if (std::abs(r) < 1e-6) {
        sinc_h = 1.0 + r2 / 6.0 + r2 * r2 / 120.0;
        cosh_r = 1.0 + r2 / 2.0 + r2 * r2 / 24.0;
    } else {
        sinc_h = std::sinh(r) / r;
        cosh_r = std::cosh(r);
    }

    const Mat2 traceless = m - Mat2::diag(d.a0, d.a0);
    return std::exp(d.a0) * (cosh_r * Mat2::identity() + sinc_h * traceless);
}

EigResult eig_hermitian2(const Mat2& m, double herm_tol) {
    require_finite(m, "eig_hermitian2");
    const double herm = hermiticity_residual(m);
    if (herm > herm_tol)
        throw std::invalid_argument("eig_hermitian2: anti-Hermitian residual " +
                                    std::to_string(herm) + " exceeds tolerance");

    // Work with the Hermitian average so the coefficients below are real.
    const Mat2 h = 0.5 * (m + m.dagger());
    const double a0 = h.a11.real() * 0.5 + h.a22.real() * 0.5;
    const double nz = 0.5 * (h.a11.real() - h.a22.real());
    const double nx = h.a21.real();
    const double ny = h.a21.imag();
    const double r = std::sqrt(nx * nx + ny * ny + nz * nz);

    EigResult res;
    res.lambda1 = a0 + r;
    res.lambda2 = a0 - r;

    if (r < 1e-12) {
        // Fully degenerate: any orthonormal frame works, return the canonical one.
        res.w = Mat2::identity();
        return res;
    }

    // Eigenvector of n.sigma for +r; two algebraically equivalent forms, pick
    // the better conditioned one.
    cplx v1, v2;
    if (nz >= 0.0) {
        v1 = cplx(r + nz, 0.0);
        v2 = cplx(nx, ny);
    } else {
        v1 = cplx(nx, -ny);
        v2 = cplx(r - nz, 0.0);
    }
    const double norm = std::sqrt(std::norm(v1) + std::norm(v2));
    v1 /= norm;
    v2 /= norm;

    // Orthogonal partner for -r.
    cplx u1 = -std::conj(v2);
    cplx u2 = std::conj(v1);

    // Phase convention: first component of each column with modulus above
    // threshold is made real-positive.
    auto fix_phase = [](cplx& c1, cplx& c2) {
        cplx lead = (std::abs(c1) > 1e-12) ? c1 : c2;
        const cplx ph = std::conj(lead) / std::abs(lead);
        c1 *= ph;
        c2 *= ph;
    };
    fix_phase(v1, v2);
    fix_phase(u1, u2);

    res.w = {v1, u1, v2, u2};
    return res;
}

double gate_fidelity(const Mat2& a, const Mat2& b, double unitary_tol) {
    const double ra = unitarity_residual(a);
    const double rb = unitarity_residual(b);
    if (ra > unitary_tol || rb > unitary_tol)
        throw std::invalid_argument("gate_fidelity: non-unitary input, residuals " +
                                    std::to_string(ra) + ", " + std::to_string(rb));
    return 0.5 * std::abs((a.dagger() * b).trace());
}

Mat2 metric_residual(const Mat2& m, const Mat2& eta) {
    if (hermiticity_residual(eta) > 1e-12)
        throw std::invalid_argument("metric_residual: eta must be Hermitian");
    if (std::abs(eta.det()) == 0.0)
        throw std::invalid_argument("metric_residual: eta must be invertible");
    return m * eta * m.dagger() - eta;
}

}  // namespace toqc
