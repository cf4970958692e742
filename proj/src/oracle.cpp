#include "subord/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace subord::oracle {

void OracleConfig::validate() const
{
    if (radial_resolution < 64 || angular_resolution < 64)
        throw Error(ErrorCode::BadParams, "oracle resolution must be at least 64");
    if (!(fd_step > 0.0 && fd_step < 1e-3))
        throw Error(ErrorCode::BadParams, "fd_step must lie in (0, 1e-3)");
}

namespace {

constexpr double kOuterRadius = 1.0 - 1e-6;
constexpr double kFRadius = 0.999;
constexpr double kCloudTolerance = 1e-6;
constexpr int kFRings = 32;

// Classic even-odd ray casting (W. Randolph Franklin's pnpoly).
bool inside_polygon(const std::vector<Complex>& poly, Complex p)
{
    bool inside = false;
    const double px = p.real();
    const double py = p.imag();
    for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
        const double xi = poly[i].real(), yi = poly[i].imag();
        const double xj = poly[j].real(), yj = poly[j].imag();
        if (((yi > py) != (yj > py)) && (px < (xj - xi) * (py - yi) / (yj - yi) + xi))
            inside = !inside;
    }
    return inside;
}

double distance_to_polygon(const std::vector<Complex>& poly, Complex p)
{
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
        const Complex d = poly[i] - poly[j];
        const double len2 = std::norm(d);
        const double t = len2 > 0.0 ? std::clamp(((p - poly[j]) * std::conj(d)).real() / len2, 0.0, 1.0) : 0.0;
        best = std::min(best, std::abs(p - (poly[j] + t * d)));
    }
    return best;
}

bool near_cloud(const std::vector<Complex>& cloud_by_x, Complex p)
{
    auto lo = std::lower_bound(cloud_by_x.begin(), cloud_by_x.end(), p.real() - kCloudTolerance,
                               [](Complex c, double x) { return c.real() < x; });
    for (auto it = lo; it != cloud_by_x.end() && it->real() <= p.real() + kCloudTolerance; ++it) {
        if (std::abs(*it - p) <= kCloudTolerance)
            return true;
    }
    return false;
}

} // namespace

bool grid_containment(const AnalyticMap& f, const AnalyticMap& g, const OracleConfig& cfg)
{
    cfg.validate();
    const int na = cfg.angular_resolution;
    const double step = 2.0 * std::numbers::pi / na;

    std::vector<Complex> outer(static_cast<std::size_t>(na));
    for (int k = 0; k < na; ++k)
        outer[k] = g(std::polar(kOuterRadius, k * step));

    // The image of the closed disk of radius kOuterRadius stays within one
    // polygon edge length of the polygon, so only samples that close to it can
    // be rescued by the cloud, which is built on first need.
    double max_edge = 0.0;
    for (std::size_t i = 0, j = outer.size() - 1; i < outer.size(); j = i++)
        max_edge = std::max(max_edge, std::abs(outer[i] - outer[j]));

    // The point cloud is only needed for samples the polygon test rejects.
    std::vector<Complex> cloud;
    auto build_cloud = [&] {
        cloud.reserve(static_cast<std::size_t>(cfg.radial_resolution) * na + 1);
        cloud.push_back(g(0.0));
        for (int j = 1; j <= cfg.radial_resolution; ++j) {
            const double r = kOuterRadius * j / cfg.radial_resolution;
            for (int k = 0; k < na; ++k)
                cloud.push_back(g(std::polar(r, k * step)));
        }
        std::sort(cloud.begin(), cloud.end(), [](Complex a, Complex b) { return a.real() < b.real(); });
    };

    for (int j = 1; j <= kFRings; ++j) {
        const double r = kFRadius * j / kFRings;
        for (int k = 0; k < na; ++k) {
            const Complex w = f(std::polar(r, k * step));
            if (inside_polygon(outer, w))
                continue;
            if (distance_to_polygon(outer, w) > max_edge + kCloudTolerance)
                return false;
            if (cloud.empty())
                build_cloud();
            if (!near_cloud(cloud, w))
                return false;
        }
    }
    return true;
}

Complex finite_difference(const AnalyticMap& m, Complex z, const OracleConfig& cfg)
{
    cfg.validate();
    const double h = cfg.fd_step;
    return (m(z + h) - m(z - h)) / (2.0 * h);
}

} // namespace subord::oracle
