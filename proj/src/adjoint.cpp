#include "toqc/adjoint.hpp"

#include <cmath>

namespace toqc::adjrep {

Rot3 rot3_identity() {
    return {{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}};
}

Rot3 rot3_mul(const Rot3& a, const Rot3& b) {
    Rot3 c{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
    return c;
}

double rot3_max_abs_diff(const Rot3& a, const Rot3& b) {
    double r = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r = std::max(r, std::abs(a[i][j] - b[i][j]));
    return r;
}

double rot3_orthogonality_residual(const Rot3& r) {
    Rot3 rt;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) rt[i][j] = r[j][i];
    return rot3_max_abs_diff(rot3_mul(r, rt), rot3_identity());
}

double rot3_det(const Rot3& r) {
    return r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1]) -
           r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0]) +
           r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]);
}

Rot3 adjoint_matrix(const Mat2& u, double unitary_tol) {
    const double res = unitarity_residual(u);
    if (res > unitary_tol)
        throw std::invalid_argument("adjoint_matrix: non-unitary input, residual " +
                                    std::to_string(res));

    const Mat2 paulis[3] = {sigma_x(), sigma_y(), sigma_z()};
    Rot3 r{};
    for (int i = 0; i < 3; ++i) {
        const Mat2 rotated = u * paulis[i] * u.dagger();
        // Trace projection onto each Pauli axis; real for unitary input.
        for (int j = 0; j < 3; ++j)
            r[i][j] = 0.5 * (paulis[j] * rotated).trace().real();
    }
    return r;
}

}  // namespace toqc::adjrep
