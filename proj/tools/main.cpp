#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "toqc/run.hpp"

namespace {

int write_output(const std::string& payload, const std::string& path) {
    if (path.empty()) {
        std::cout << payload;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open output file: " << path << "\n";
        return 2;
    }
    out << payload;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    using toqc::cli::Format;
    using toqc::cli::RunConfig;

    CLI::App app{"Time-optimal qubit control toolkit: identity verification, "
                 "trajectory export and gate matching"};

    RunConfig cfg;
    std::string command = "verify";
    std::string format = "json";

    app.add_option("--command", command, "verify | trajectory | gates")
        ->check(CLI::IsMember({"verify", "trajectory", "gates"}));
    app.add_option("--R", cfg.R, "coupling amplitude");
    app.add_option("--omega", cfg.omega, "frame frequency");
    app.add_option("--E", cfg.E, "Stark energy offset");
    app.add_option("--Delta", cfg.Delta, "Stark detuning");
    app.add_option("--V", cfg.V, "Stark coupling magnitude");
    app.add_option("--phi", cfg.phi, "Stark coupling phase");
    app.add_option("--omega-drive", cfg.omega_drive, "AC drive frequency");
    app.add_option("--t-start", cfg.t_start, "trajectory start time");
    app.add_option("--t-end", cfg.t_end, "trajectory end time");
    app.add_option("--samples", cfg.samples, "sample count (>= 2)");
    app.add_option("--tol", cfg.tol, "default claim tolerance");
    app.add_option("--family", cfg.family,
                   "propagator family: eigenframe | T | Tinv | S | Sinv | V | "
                   "numerical | hyperbolic");
    app.add_option("--out", cfg.output_path, "output file (default stdout)");
    app.add_option("--format", format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    cfg.format = format == "json" ? Format::Json
                 : format == "csv" ? Format::Csv
                                   : Format::Text;

    try {
        cfg.validate();

        if (command == "verify") {
            cfg.command = toqc::cli::Command::Verify;
            const auto report = toqc::cli::run_verify(cfg);
            const std::string payload = cfg.format == Format::Text
                                            ? report.to_text()
                                            : report.to_json(cfg).dump(2) + "\n";
            if (int rc = write_output(payload, cfg.output_path)) return rc;
            return report.all_as_expected ? 0 : 1;
        }

        if (command == "trajectory") {
            cfg.command = toqc::cli::Command::Trajectory;
            std::ostringstream os;
            toqc::cli::run_trajectory(cfg, os);
            return write_output(os.str(), cfg.output_path);
        }

        cfg.command = toqc::cli::Command::Gates;
        const auto gates = toqc::cli::run_gates(cfg);
        return write_output(gates.dump(2) + "\n", cfg.output_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
