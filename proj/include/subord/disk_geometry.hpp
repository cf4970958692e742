#pragma once

#include "subord/analytic_map.hpp"
#include "subord/condition.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace subord {

/// Where "for all z in the disk" quantifiers are sampled: every radius in
/// `radii` times `angular_count` equally spaced angles starting at 0.
struct SampleGrid {
    std::vector<double> radii{0.5, 0.9, 0.99, 0.999};
    int angular_count = 4096;

    /// Throws BadParams unless radii are strictly increasing in (0, 1) and
    /// angular_count >= 64.
    void validate() const;

    Complex point(std::size_t radius_index, int k) const;
    std::size_t size() const { return radii.size() * static_cast<std::size_t>(angular_count); }
};

struct CurveSample {
    double theta;
    Complex w;
};

/// Sampled closed curve g(rho e^{i theta}), theta in [0, 2pi). The last sample
/// connects back to the first.
struct ImageCurve {
    std::vector<CurveSample> samples;
    double rho = 0.0;
    /// +1 counter-clockwise, -1 clockwise, 0 degenerate.
    int orientation = 0;

    std::vector<Complex> points() const;
    double diameter() const;
    double max_gap() const;
};

/// Diameter of a point set (convex hull plus rotating calipers).
double point_set_diameter(std::span<const Complex> pts);

struct RefinementOptions {
    /// A segment may not be longer than this fraction of the curve diameter.
    double gap_fraction = 1e-2;
    /// A segment is split while its chord midpoint is farther than
    /// rel_deviation * (1 + |w|) from the curve midpoint w.
    double rel_deviation = 1e-7;
    std::size_t max_points = std::size_t{1} << 20;
};

/// Samples g on |z| = rho starting from n equal angles and bisects segments
/// until both refinement criteria hold. Throws RefinementLimit when the
/// point budget runs out and propagates evaluation errors.
ImageCurve boundary_curve(const AnalyticMap& g, double rho, int n, const RefinementOptions& opts = {});

/// Winding number of the closed polyline about w from summed signed angle
/// increments. Throws TooCloseToCurve if w is within 1e-9 of a segment and
/// AmbiguousWinding if the sum is not within 0.25 of an integer.
int winding_number(const ImageCurve& c, Complex w);

/// Spatial index over the segments of a closed polyline for repeated
/// containment and proximity queries. Segments are binned into horizontal
/// slabs whose edges sit at quantiles of the vertex heights.
class CurveIndex {
public:
    explicit CurveIndex(std::vector<Complex> pts);

    /// Exact crossing-rule winding number of the polyline about w.
    int winding(Complex w) const;
    /// Distance from w to the polyline, or `limit` if it is at least `limit`.
    double distance_within(Complex w, double limit) const;
    /// Distance from w to the nearest point where the polyline crosses the
    /// horizontal line through w; infinity if it never does. An upper bound on
    /// distance_within, exact for curves that are locally vertical.
    double horizontal_clearance(Complex w) const;
    /// True if two non-adjacent segments cross properly.
    bool self_intersects() const;

    std::size_t segment_count() const { return pts_.size(); }

private:
    std::size_t slab_of(double y) const;
    Complex seg_start(std::size_t i) const { return pts_[i]; }
    Complex seg_end(std::size_t i) const { return pts_[i + 1 == pts_.size() ? 0 : i + 1]; }

    std::vector<Complex> pts_;
    std::vector<double> edges_;
    std::vector<std::size_t> offsets_;
    std::vector<std::size_t> members_;
};

/// min over the grid of Re m(z), with the argmin as witness. Passes when the
/// minimum is positive; minima in (0, 1e-4) carry a soft flag. Evaluation
/// errors propagate with the offending grid point.
ConditionReport min_real_part(const AnalyticMap& m, const SampleGrid& grid, std::string name = "min-real-part");

enum class Outcome { Holds, Fails, Inconclusive };

std::string_view to_string(Outcome o);

struct SubordinationVerdict {
    Outcome outcome = Outcome::Inconclusive;
    std::optional<Complex> witness_z;
    std::optional<Complex> witness_w;
    std::string detail;
};

/// Decides f < g numerically for g univalent on the disk.
///
/// Holds when f(0) = g(0) and, for every grid radius r, some rho from an
/// 8-step geometric ladder on [max(r, 0.9), 1 - 1e-6] has every f(r e^{i theta})
/// strictly inside g(|z| = rho) with clearance. Fails, with the sample of
/// largest horizontal clearance as witness, when an f-value lies clearly outside the
/// curve at rho = 1 - 1e-6. Everything else, including a self-intersecting
/// image of g, is Inconclusive.
SubordinationVerdict test_subordination(const AnalyticMap& f, const AnalyticMap& g, const SampleGrid& grid);

/// Tolerances shared by the subordination test.
inline constexpr double kCenterTolerance = 1e-9;
inline constexpr double kOuterRho = 1.0 - 1e-6;
inline double clearance_tolerance(Complex w) { return 1e-6 * (1.0 + std::abs(w)); }

} // namespace subord
