#include "toqc/frames.hpp"

#include <cmath>

namespace toqc::frames {

namespace {

const cplx kI(0.0, 1.0);
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

std::vector<FrameTransform> build_catalog() {
    const Mat2 t{kInvSqrt2, -kI * kInvSqrt2, -kI * kInvSqrt2, kInvSqrt2};
    const Mat2 s{kI * kInvSqrt2, -kI * kInvSqrt2, -kInvSqrt2, -kInvSqrt2};
    const Mat2 v{kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
    const Mat2 z{-kI, 0.0, 0.0, 1.0};
    const Mat2 y = z * s;  // (1/sqrt2) [[1,-1],[-1,-1]], self-inverse

    std::vector<FrameTransform> cat;
    cat.push_back({"1", Mat2::identity(), Mat2::identity()});
    cat.push_back({"T", t, t.dagger()});
    cat.push_back({"Tinv", t.dagger(), t});
    cat.push_back({"S", s, s.dagger()});
    cat.push_back({"Sinv", s.dagger(), s});
    cat.push_back({"V", v, v});
    cat.push_back({"Z", z, z.dagger()});
    cat.push_back({"Zinv", z.dagger(), z});
    cat.push_back({"Y", y, y});
    return cat;
}

}  // namespace

const std::vector<FrameTransform>& catalog() {
    static const std::vector<FrameTransform> cat = build_catalog();
    return cat;
}

const FrameTransform& frame(const std::string& name) {
    for (const auto& f : catalog())
        if (f.name == name) return f;
    throw std::invalid_argument("frame: unknown transform '" + name + "'");
}

ControlSystem transform_system(const FrameTransform& q, const ControlSystem& sys) {
    ControlSystem out;
    out.hamiltonian = [q, h = sys.hamiltonian](double t) { return conjugate(q, h(t)); };
    out.constraint = [q, f = sys.constraint](double t) { return conjugate(q, f(t)); };
    out.k = sys.k;
    return out;
}

Mat2 transformed_propagator(const std::string& q_name, const OptimalQubitParams& p,
                            double t, double s) {
    const double phi = p.omega * (t - s);
    const cplx g = std::exp(kI * phi);  // global phase
    const double c = std::cos(phi);
    const double sn = std::sin(phi);

    if (q_name == "1") return Mat2::diag(g * g, 1.0);
    if (q_name == "T") return g * Mat2{c, -sn, sn, c};
    if (q_name == "Tinv" || q_name == "S") return g * Mat2{c, sn, -sn, c};
    if (q_name == "Sinv") return g * Mat2{c, -kI * sn, -kI * sn, c};
    if (q_name == "V") return g * Mat2{c, kI * sn, kI * sn, c};
    throw std::invalid_argument("transformed_propagator: unknown transform '" +
                                q_name + "'");
}

Mat2 SignedPauli::matrix(double omega_scale) const {
    Mat2 base;
    switch (axis) {
        case 'x': base = sigma_x(); break;
        case 'y': base = sigma_y(); break;
        case 'z': base = sigma_z(); break;
        default: throw std::logic_error("SignedPauli: bad axis");
    }
    return (sign * omega_scale) * base;
}

std::string SignedPauli::label() const {
    return std::string(sign < 0 ? "-" : "+") + "sigma_" + axis;
}

SignedPauli constraint_image(const std::string& q_name) {
    if (q_name == "1") return {+1.0, 'z'};
    if (q_name == "T") return {-1.0, 'y'};
    if (q_name == "Tinv") return {+1.0, 'y'};
    if (q_name == "S") return {+1.0, 'y'};
    if (q_name == "Sinv") return {-1.0, 'x'};
    if (q_name == "V") return {+1.0, 'x'};
    throw std::invalid_argument("constraint_image: unknown transform '" + q_name + "'");
}

Verdict verify_identity(const IdentityClaim& claim, double tol) {
    if (claim.sample_times.empty())
        throw std::invalid_argument("verify_identity: empty sample grid");
    Verdict v{VerdictStatus::Pass, 0.0, claim.sample_times.size(), ""};
    for (double t : claim.sample_times) {
        try {
            v.max_residual = std::max(v.max_residual,
                                      max_abs_diff(claim.lhs(t), claim.rhs(t)));
        } catch (const std::exception& e) {
            return {VerdictStatus::Error, v.max_residual, claim.sample_times.size(),
                    "evaluation failed at t=" + std::to_string(t) + ": " + e.what()};
        }
    }
    if (v.max_residual > tol) v.status = VerdictStatus::Deviate;
    return v;
}

namespace {

std::vector<double> default_grid() {
    std::vector<double> ts;
    for (int j = 0; j <= 16; ++j) ts.push_back(-1.0 + 0.25 * j);
    return ts;
}

brach::Generator constant(const Mat2& m) {
    return [m](double) { return m; };
}

// Search column swaps and sign flips of the right-hand side for a variant
// that makes a deviating claim hold; documents one-symbol typos without
// rewriting the printed form.
std::optional<IdentityClaim> repaired_variant(const IdentityClaim& claim, double tol) {
    struct Op {
        Mat2 m;
        const char* tag;
    };
    const Op ops[] = {
        {{-1.0, 0.0, 0.0, 1.0}, "negate col 1"},
        {{1.0, 0.0, 0.0, -1.0}, "negate col 2"},
        {{-1.0, 0.0, 0.0, -1.0}, "negate both cols"},
        {{0.0, 1.0, 1.0, 0.0}, "swap cols"},
        {{0.0, -1.0, 1.0, 0.0}, "swap cols, negate col 1"},
        {{0.0, 1.0, -1.0, 0.0}, "swap cols, negate col 2"},
        {{0.0, -1.0, -1.0, 0.0}, "swap cols, negate both"},
    };
    for (const auto& op : ops) {
        IdentityClaim cand = claim;
        cand.id = claim.id + "~repaired";
        cand.anchor = claim.anchor + " (" + op.tag + ")";
        cand.rhs = [rhs = claim.rhs, m = op.m](double t) { return rhs(t) * m; };
        cand.expected = ClaimStatus::Holds;
        if (verify_identity(cand, tol).status == VerdictStatus::Pass) return cand;
    }
    return std::nullopt;
}

}  // namespace

std::vector<IdentityClaim> identity_ledger(const OptimalQubitParams& p) {
    const auto grid = default_grid();
    const Mat2 T = frame("T").q, Tinv = frame("Tinv").q;
    const Mat2 S = frame("S").q, Sinv = frame("Sinv").q;
    const Mat2 V = frame("V").q, Z = frame("Z").q, Y = frame("Y").q;

    auto W = [p](double t) { return brach::optimal_eigenmatrix(p, t); };
    auto Hopt = [p](double t) { return brach::optimal_hamiltonian(p, t); };
    auto e2 = [p](double t) { return std::exp(2.0 * kI * p.omega * t); };

    const double s0 = 0.31;  // reference time for two-time claims

    std::vector<IdentityClaim> claims;
    auto add = [&](std::string id, std::string anchor, brach::Generator lhs,
                   brach::Generator rhs, ClaimStatus expected) {
        claims.push_back({std::move(id), std::move(anchor), std::move(lhs),
                          std::move(rhs), grid, expected});
    };

    // Braiding relations among the constant transforms.
    add("braid-iSTS", "Sec.5 Eq.(45)", constant(kI * (Sinv * T * Sinv)), constant(Tinv),
        ClaimStatus::Holds);
    add("braid-T-from-S", "Sec.5 Eq.(46)", constant(T), constant(-kI * (S * Tinv * S)),
        ClaimStatus::Holds);
    add("braid-alt-printed", "Sec.5 after Eq.(46), alternative form", constant(Sinv * T),
        constant(-kI * (S * Tinv)), ClaimStatus::Deviates);
    add("braid-alt-corrected", "Sec.5 after Eq.(46), order repaired",
        constant(Sinv * T), constant(-kI * (Tinv * S)), ClaimStatus::Holds);
    add("ZSZ", "Sec.6, Z S Z = S^-1", constant(Z * S * Z), constant(Sinv),
        ClaimStatus::Holds);
    add("Y-squared", "Sec.6, Y^2 = 1", constant(Y * Y), constant(Mat2::identity()),
        ClaimStatus::Holds);

    // Eigenmatrix conjugation identities.
    add("VWV-braiding", "Sec.6 Eq.(54)",
        [=](double t) { return V * W(t) * V; },
        [=](double t) { return std::exp(-2.0 * kI * p.omega * t) * W(t); },
        ClaimStatus::Deviates);
    add("SinvWSinv", "Sec.6 Eq.(55)",
        [=](double t) { return Sinv * W(t) * Sinv; },
        [=](double t) {
            return Mat2{-kInvSqrt2 * e2(t), kInvSqrt2, kInvSqrt2 * e2(t), kInvSqrt2};
        },
        ClaimStatus::Holds);
    add("SWSinv", "Sec.6 Eq.(56)",
        [=](double t) { return S * W(t) * Sinv; },
        [=](double t) {
            return Mat2{kInvSqrt2 * e2(t), kI * kInvSqrt2, kI * kInvSqrt2 * e2(t),
                        kInvSqrt2};
        },
        ClaimStatus::Holds);
    add("YWYinv", "Sec.6, Y W Y^-1 = W^dag(-t)",
        [=](double t) { return Y * W(t) * Y; },
        [=](double t) { return W(-t).dagger(); }, ClaimStatus::Holds);
    add("Y2WY2", "Sec.6, Y^2 W Y^-2 = W",
        [=](double t) { return Y * Y * W(t) * Y * Y; }, W, ClaimStatus::Holds);

    // Eigenmatrix ODE: i dW/dt = H_opt W as printed; the central-difference
    // derivative exposes an O(1) residual.
    add("eigenmatrix-ode", "Sec.6 Eq.(53)",
        [=](double t) {
            const double h = brach::kDefaultFdStep;
            return kI * ((1.0 / (2.0 * h)) * (W(t + h) - W(t - h)));
        },
        [=](double t) { return Hopt(t) * W(t); }, ClaimStatus::Deviates);

    // Transformed Hamiltonians as printed vs direct conjugation.
    struct PrintedH {
        const char* q;
        const char* anchor;
        Mat2 (*form)(double R, double th);
    };
    const PrintedH printed_h[] = {
        {"T", "Sec.5, transformed Hamiltonian for T",
         [](double R, double th) {
             return Mat2{-R * std::sin(th), R * std::cos(th), R * std::cos(th),
                         R * std::sin(th)};
         }},
        {"Tinv", "Sec.5, transformed Hamiltonian for T^-1",
         [](double R, double th) {
             return Mat2{R * std::sin(th), R * std::cos(th), R * std::cos(th),
                         -R * std::sin(th)};
         }},
        {"S", "Sec.5, transformed Hamiltonian for S",
         [](double R, double th) {
             return Mat2{-R * std::cos(th), R * std::sin(th), R * std::sin(th),
                         R * std::cos(th)};
         }},
        {"Sinv", "Sec.5, transformed Hamiltonian for S^-1",
         [](double R, double th) {
             return Mat2{-R * std::sin(th), kI * R * std::cos(th),
                         -kI * R * std::cos(th), R * std::sin(th)};
         }},
        {"V", "Sec.5, transformed Hamiltonian for V",
         [](double R, double th) {
             return Mat2{R * std::cos(th), -kI * R * std::sin(th),
                         kI * R * std::sin(th), -R * std::cos(th)};
         }},
    };
    for (const auto& ph : printed_h) {
        const FrameTransform& q = frame(ph.q);
        add(std::string("H") + ph.q + "-printed", ph.anchor,
            [=](double t) { return conjugate(q, Hopt(t)); },
            [=, form = ph.form](double t) { return form(p.R, 2.0 * p.omega * t); },
            ClaimStatus::Holds);
    }

    // Closed-form transformed propagators vs conjugation of the eigenframe
    // propagator, and Hamiltonian transport for every propagator family.
    for (const char* qn : {"1", "T", "Tinv", "S", "Sinv", "V"}) {
        const FrameTransform& q = frame(qn);
        add(std::string("U") + qn + "-closed-form", "Sec.5, closed-form transformed propagators",
            [=](double t) { return transformed_propagator(qn, p, t, s0); },
            [=](double t) {
                return conjugate(q, brach::eigenframe_propagator(p, t, s0));
            },
            ClaimStatus::Holds);
        add(std::string("U") + qn + "-transport", "Sec.5, Hamiltonian transport (sum of angles)",
            [=](double t) {
                const Mat2 u = transformed_propagator(qn, p, t, s0);
                return u * conjugate(q, Hopt(s0)) * u.dagger();
            },
            [=](double t) { return conjugate(q, Hopt(t)); }, ClaimStatus::Holds);
    }
    add("UTinv-star", "Sec.5, U_Tinv(phi) = U_T*(-phi)",
        [=](double t) { return transformed_propagator("Tinv", p, t, s0); },
        [=](double t) {
            return transformed_propagator("T", p, 2.0 * s0 - t, s0).conjugated();
        },
        ClaimStatus::Holds);

    // Eigenframe reconstruction in the S frame.
    add("WS-diagonalises-HS", "Sec.8, W_S diagonalises H_S to R sigma_y",
        [=](double t) {
            const Mat2 ws = S * W(t) * Sinv;
            return ws.inverse() * conjugate(frame("S"), Hopt(t)) * ws;
        },
        constant(p.R * sigma_y()), ClaimStatus::Holds);
    add("US-from-WS", "Sec.6 Eq.(60)",
        [=](double t) {
            const Mat2 ws_t = S * W(t) * Sinv;
            const Mat2 ws_s = S * W(s0) * Sinv;
            return ws_t * ws_s.dagger();
        },
        [=](double t) { return transformed_propagator("S", p, t, s0); },
        ClaimStatus::Holds);

    // Companion entries for deviating eigenmatrix claims that a single
    // column swap or sign flip would repair.
    std::vector<IdentityClaim> companions;
    for (const auto& c : claims) {
        if (c.expected != ClaimStatus::Deviates) continue;
        if (c.id != "VWV-braiding" && c.id != "eigenmatrix-ode") continue;
        if (auto rep = repaired_variant(c, 1e-10)) companions.push_back(*rep);
    }
    claims.insert(claims.end(), companions.begin(), companions.end());
    return claims;
}

}  // namespace toqc::frames
