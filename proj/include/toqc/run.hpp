#pragma once

// Report-level entry points behind the command-line tool: the full claim
// ledger with machine-readable verdicts, trajectory export, and gate
// matching.

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "toqc/frames.hpp"

namespace toqc::cli {

inline constexpr const char* kToolVersion = "1.0.0";

enum class Command { Verify, Trajectory, Gates };
enum class Format { Json, Csv, Text };

struct RunConfig {
    Command command = Command::Verify;

    double R = 1.0;
    double omega = 1.0;
    double E = 0.5;
    double Delta = 1.0;
    double V = 1.0;
    double phi = 0.7;
    double omega_drive = 1.0;

    double t_start = 0.0;
    double t_end = 6.283185307179586;
    int samples = 100;
    double tol = 1e-12;

    std::string family = "eigenframe";
    std::string output_path;  // empty = stdout
    Format format = Format::Json;

    void validate() const;  // throws std::invalid_argument on a bad config
};

struct ClaimVerdict {
    std::string id;
    std::string anchor;
    frames::ClaimStatus expected;
    frames::VerdictStatus status;
    double max_residual;
    std::size_t sample_count;
};

struct VerificationReport {
    std::vector<ClaimVerdict> claims;
    bool all_as_expected = true;

    nlohmann::ordered_json to_json(const RunConfig& cfg) const;
    std::string to_text() const;
};

// Evaluates every ledger claim plus the cross-module checks (closed-form vs
// integrator, governing-equation residuals, hyperbolic sector, adjoint
// representation).
VerificationReport run_verify(const RunConfig& cfg);

// CSV rows t, Re/Im of the four propagator entries, and the Bloch vector of
// U|0>. Families: eigenframe, T, Tinv, S, Sinv, V, numerical, hyperbolic.
void run_trajectory(const RunConfig& cfg, std::ostream& out);

// Grid-search plus golden-section match of each one-parameter propagator
// family against the X, Z, Hadamard and phase gates.
nlohmann::ordered_json run_gates(const RunConfig& cfg);

}  // namespace toqc::cli
