#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "kq/poly_core.hpp"

namespace kq {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int {
    kExitOk = 0,
    kExitInvalidInput = 2,
    kExitDegenerate = 3,
    kExitVerificationFailure = 4,
};

/// Tolerances recorded in every report.
struct Tolerances {
    double dedup = 1e-7;
    /// Threshold for the identity checks (spreads, suppressed coefficients, power sums, matching).
    double check = 1e-7;
    double residual = 1e-6;
    double rank = 1e-6;
    /// Required fraction of instances whose p2 control exceeds 1e-3.
    double p2_control_fraction = 0.95;

    nlohmann::json to_json() const;
};

nlohmann::json complex_json(Complex z);

/// Each returns the report body and sets `passed`. Degenerate input throws Degenerate.
nlohmann::json resolve_report(const RootTuple& rt, const Tolerances& tol, bool& passed);
nlohmann::json orbit_report(const RootTuple& rt, const Tolerances& tol, bool& passed);
nlohmann::json brioschi_report(const RootTuple& rt, const Tolerances& tol, bool& passed);

/// Batch orbit over generated instances (seed, 0..n-1), including the rank test.
nlohmann::json orbit_batch_report(std::uint64_t seed, int n, const Tolerances& tol, bool& passed);

struct VerifyOutcome {
    nlohmann::json report;
    bool passed = false;
};

/// Runs every property over generated instances (seed, 0..n-1).
/// Instances run concurrently; the report content does not depend on scheduling
/// except for meta.wall_time_s.
VerifyOutcome run_verify(std::uint64_t seed, int n, const Tolerances& tol);

/// Entry point for the kq executable. args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kq
