#pragma once

#include "subord/disk_geometry.hpp"
#include "subord/params.hpp"
#include "subord/report.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace subord::cli {

inline constexpr const char* kCommands[] = {"check-class",   "check-hypotheses",   "test-subordination", "verify-sandwich",
                                            "verify-dominant", "verify-subordinant", "scan",                "falsify",
                                            "plot"};

/// `count` equally spaced values from `first` to `last` inclusive.
struct ScanAxis {
    double first = 0.0;
    double last = 0.0;
    int count = 0;

    std::vector<double> values() const;
};

struct RunConfig {
    std::string command;
    /// Function specs keyed by role: f, g, p, q, q1, q2.
    std::map<std::string, std::string> functions;
    /// Family used for q when no explicit q is given.
    std::optional<std::string> family;
    ParamSet ps;
    std::optional<SampleGrid> grid;
    std::filesystem::path out = ".";
    std::uint64_t seed = 0;
    std::size_t trials = 500;
    ScanAxis scan_A{0.1, 0.9, 9};
    ScanAxis scan_B{-0.9, -0.1, 9};
    /// Real delta values swept by scan; empty means the single ps.delta.
    std::vector<double> scan_delta;
    std::optional<double> plot_radius;

    /// Throws BadParams on an unknown command, unknown function role or
    /// invalid parameters.
    void validate() const;
};

/// "re,im" or a bare real.
Complex parse_complex(const std::string& text);
/// Comma separated reals.
std::vector<double> parse_list(const std::string& text);

/// Reads a JSON config. Keys mirror the command line flags; unknown keys are
/// rejected so typos do not silently fall back to defaults.
RunConfig config_from_json(const Json& j);

/// The config as echoed in reports: everything that determines the result,
/// nothing about where it was written.
Json config_json(const RunConfig& cfg);

} // namespace subord::cli
