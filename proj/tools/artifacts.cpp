#include "artifacts.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>

namespace subord::cli {

std::string format_number(double x)
{
    if (!std::isfinite(x))
        return {};
    if (x == 0.0)
        x = 0.0; // no "-0"
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), ptr);
}

std::string csv_field(std::string_view s)
{
    if (s.find_first_of(",\"\r\n") == std::string_view::npos)
        return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

namespace {

std::string opt_number(const std::optional<double>& x) { return x ? format_number(*x) : std::string{}; }
std::string opt_bool(const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : ""; }

std::string xml_escape(std::string_view s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

constexpr std::array<const char*, 8> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                              "#9467bd", "#8c564b", "#e377c2", "#17becf"};

} // namespace

std::string scan_csv(const std::vector<ScanRow>& rows)
{
    std::string out(kScanHeader);
    out += "\r\n";
    for (const auto& r : rows) {
        const std::array<std::string, 15> fields{
            format_number(r.A),         format_number(r.B),          format_number(r.alpha),
            format_number(r.beta.real()), format_number(r.beta.imag()), format_number(r.gamma.real()),
            format_number(r.gamma.imag()), format_number(r.delta.real()), format_number(r.delta.imag()),
            format_number(r.mu),        opt_number(r.cond22_min),    opt_number(r.cond23_min),
            opt_number(r.qstar_min),    opt_bool(r.closed_form_1),   opt_bool(r.closed_form_2)};
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i)
                out += ',';
            out += csv_field(fields[i]);
        }
        out += "\r\n";
    }
    return out;
}

std::string render_svg(const std::vector<LabeledCurve>& curves)
{
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& c : curves)
        for (const auto& s : c.curve.samples) {
            xmin = std::min(xmin, s.w.real());
            xmax = std::max(xmax, s.w.real());
            ymin = std::min(ymin, s.w.imag());
            ymax = std::max(ymax, s.w.imag());
        }
    if (!std::isfinite(xmin))
        throw Error(ErrorCode::BadParams, "nothing to plot");

    double span = std::max(xmax - xmin, ymax - ymin);
    if (span <= 0.0)
        span = 1.0;
    const double pad = 0.01 * span;
    const double vx = xmin - pad, vy = -ymax - pad;
    const double vw = xmax - xmin + 2 * pad, vh = ymax - ymin + 2 * pad;
    const double font = 0.03 * span;
    const int px_w = 800;
    const int px_h = std::max(1, static_cast<int>(std::lround(px_w * vh / vw)));

    auto n = format_number;
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(px_w) + "\" height=\"" +
           std::to_string(px_h) + "\" viewBox=\"" + n(vx) + " " + n(vy) + " " + n(vw) + " " + n(vh) + "\">\n";
    for (std::size_t i = 0; i < curves.size(); ++i) {
        const auto& samples = curves[i].curve.samples;
        out += "<polyline fill=\"none\" stroke=\"" + std::string(kPalette[i % kPalette.size()]) +
               "\" stroke-width=\"1.5\" vector-effect=\"non-scaling-stroke\" points=\"";
        for (std::size_t k = 0; k <= samples.size(); ++k) {
            if (samples.empty())
                break;
            const Complex w = samples[k % samples.size()].w;
            if (k)
                out += ' ';
            out += n(w.real()) + "," + n(-w.imag());
        }
        out += "\"/>\n";
    }
    out += "<g font-family=\"sans-serif\" font-size=\"" + n(font) + "\">\n";
    for (std::size_t i = 0; i < curves.size(); ++i)
        out += "<text x=\"" + n(vx + font) + "\" y=\"" + n(vy + 1.3 * font * (i + 1)) + "\" fill=\"" +
               kPalette[i % kPalette.size()] + "\">" + xml_escape(curves[i].label) + "</text>\n";
    out += "</g>\n</svg>\n";
    return out;
}

std::string curves_csv(const std::vector<LabeledCurve>& curves)
{
    std::string out = "label,theta,re,im\r\n";
    for (const auto& c : curves)
        for (const auto& s : c.curve.samples)
            out += csv_field(c.label) + "," + format_number(s.theta) + "," + format_number(s.w.real()) + "," +
                   format_number(s.w.imag()) + "\r\n";
    return out;
}

void write_file(const std::filesystem::path& path, std::string_view content)
{
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f)
        throw Error(ErrorCode::Io, "cannot open " + path.string() + " for writing");
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f)
        throw Error(ErrorCode::Io, "failed writing " + path.string());
}

} // namespace subord::cli
