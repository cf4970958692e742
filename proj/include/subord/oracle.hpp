#pragma once

// Brute-force reference computations for the test suites. Nothing here is
// shared with the containment or differentiation code it is used to check.

#include "subord/analytic_map.hpp"

namespace subord::oracle {

struct OracleConfig {
    int radial_resolution = 512;
    int angular_resolution = 2048;
    double fd_step = 1e-6;

    /// Throws BadParams unless both resolutions are >= 64 and 0 < fd_step < 1e-3.
    void validate() const;
};

/// f(D) within g(D) by dense sampling: every f-sample on rings up to
/// |z| = 0.999 must either lie inside the polygon through g on |z| = 1 - 1e-6
/// (even-odd ray casting) or within 1e-6 of the g-image point cloud.
bool grid_containment(const AnalyticMap& f, const AnalyticMap& g, const OracleConfig& cfg = {});

/// Central difference (m(z + h) - m(z - h)) / 2h with h = fd_step.
Complex finite_difference(const AnalyticMap& m, Complex z, const OracleConfig& cfg = {});

} // namespace subord::oracle
