#pragma once

#include "subord/disk_geometry.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace subord::cli {

/// Shortest round-trip decimal form; empty for non-finite values.
std::string format_number(double x);

/// RFC 4180: quoted when the field holds a comma, quote, CR or LF, with
/// embedded quotes doubled.
std::string csv_field(std::string_view s);

inline constexpr std::string_view kScanHeader =
    "A,B,alpha,beta_re,beta_im,gamma_re,gamma_im,delta_re,delta_im,mu,cond22_min,cond23_min,qstar_min,"
    "closed_form_1,closed_form_2";

/// One sweep point. Unavailable values (evaluation error, degenerate closed
/// form) are written as empty fields.
struct ScanRow {
    double A = 0.0;
    double B = 0.0;
    double alpha = 1.0;
    Complex beta = 1.0;
    Complex gamma = 0.0;
    Complex delta = 0.0;
    double mu = 1.0;
    std::optional<double> cond22_min;
    std::optional<double> cond23_min;
    std::optional<double> qstar_min;
    std::optional<bool> closed_form_1;
    std::optional<bool> closed_form_2;
};

/// Header line plus one CRLF-terminated record per row.
std::string scan_csv(const std::vector<ScanRow>& rows);

struct LabeledCurve {
    std::string label;
    ImageCurve curve;
};

/// Standalone SVG: one closed polyline per curve with y pointing up, a
/// legend, and a viewBox fitted to all points with 1% padding. Throws
/// BadParams when there is nothing to draw.
std::string render_svg(const std::vector<LabeledCurve>& curves);

/// label,theta,re,im
std::string curves_csv(const std::vector<LabeledCurve>& curves);

/// Writes the whole file at once; throws Io on failure.
void write_file(const std::filesystem::path& path, std::string_view content);

} // namespace subord::cli
