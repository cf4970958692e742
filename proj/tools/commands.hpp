#pragma once

#include "run_config.hpp"

#include "subord/analytic_map.hpp"

#include <string>

namespace subord::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitUsage = 3;

/// A serialized tree in prefix notation, or "family=NAME key=value ..." with
/// NAME one of janowski (needs A and B), cayley, koebe, identity.
AnalyticMap parse_function_spec(const std::string& spec);

struct RunResult {
    int exit_code = kExitPass;
    Json report;
    /// One line for the terminal.
    std::string summary;
};

/// Executes cfg.command, writes report.json (and any CSV/SVG artifacts) into
/// cfg.out and returns the report. Usage and I/O errors propagate as Error;
/// numerical failures are recorded in the report and mapped to exit codes.
RunResult run(const RunConfig& cfg);

/// True for error codes that mean the invocation itself was wrong.
bool is_usage_error(const Error& e);

} // namespace subord::cli
