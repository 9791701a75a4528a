#pragma once

#include <optional>
#include <string>
#include <vector>

namespace loewner {

// Process exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUnexpectedFailure = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitDomainError = 3;
inline constexpr int kExitNoConvergence = 4;

struct BoundOptions {
    std::string function;
    std::string a_path;
    std::string b_path;
    std::string norms = "op";
    std::string mode = "all"; // all | convex | quasiconvex | sconvex | refinement
    std::string out;          // empty -> stdout
};

struct QuadratureOptions {
    std::string function;
    std::string a_path;
    std::string b_path;
    double tol = 1e-9;
    std::string norms = "op";
    std::string out;
};

struct VerifyOptions {
    std::string config_path; // optional JSON SweepConfig
    std::optional<std::string> dims;
    std::optional<int> samples;
    std::optional<uint64_t> seed;
    std::optional<std::string> functions;
    std::optional<std::string> norms;
    std::optional<std::string> nu;
    std::optional<double> spectrum_lo;
    std::optional<double> spectrum_hi;
    std::optional<int> direction_samples;
    std::string out;
};

/// Each command returns a process exit code and writes a JSON report to the
/// configured output (stdout when no path is given).  Reports carry no
/// timestamps, so identical inputs give byte-identical outputs.
int run_bound(const BoundOptions &options);
int run_quadrature(const QuadratureOptions &options);
int run_verify(const VerifyOptions &options);

} // namespace loewner
