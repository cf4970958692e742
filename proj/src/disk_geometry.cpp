#include "subord/disk_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace subord {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double cross(Complex a, Complex b, Complex c)
{
    // z-component of (b - a) x (c - a)
    return (b.real() - a.real()) * (c.imag() - a.imag()) - (c.real() - a.real()) * (b.imag() - a.imag());
}

double segment_distance(Complex a, Complex b, Complex w)
{
    const Complex ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0)
        return std::abs(w - a);
    double t = ((w.real() - a.real()) * ab.real() + (w.imag() - a.imag()) * ab.imag()) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(w - (a + t * ab));
}

std::vector<Complex> convex_hull(std::vector<Complex> pts)
{
    std::sort(pts.begin(), pts.end(), [](Complex a, Complex b) {
        return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3)
        return pts;
    std::vector<Complex> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0.0)
            --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0)
            --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

} // namespace

void SampleGrid::validate() const
{
    if (radii.empty())
        throw Error(ErrorCode::BadParams, "grid needs at least one radius");
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0 && radii[i] < 1.0))
            throw Error(ErrorCode::BadParams, "grid radii must lie in (0, 1)");
        if (i > 0 && !(radii[i] > radii[i - 1]))
            throw Error(ErrorCode::BadParams, "grid radii must be strictly increasing");
    }
    if (angular_count < 64)
        throw Error(ErrorCode::BadParams, "angular_count must be at least 64");
}

Complex SampleGrid::point(std::size_t radius_index, int k) const
{
    return std::polar(radii[radius_index], kTwoPi * k / angular_count);
}

std::vector<Complex> ImageCurve::points() const
{
    std::vector<Complex> out;
    out.reserve(samples.size());
    for (const auto& s : samples)
        out.push_back(s.w);
    return out;
}

double ImageCurve::diameter() const
{
    const auto pts = points();
    return point_set_diameter(pts);
}

double ImageCurve::max_gap() const
{
    double gap = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i)
        gap = std::max(gap, std::abs(samples[(i + 1) % samples.size()].w - samples[i].w));
    return gap;
}

double point_set_diameter(std::span<const Complex> pts)
{
    const auto hull = convex_hull(std::vector<Complex>(pts.begin(), pts.end()));
    const std::size_t h = hull.size();
    if (h < 2)
        return 0.0;
    if (h == 2)
        return std::abs(hull[0] - hull[1]);
    double best = 0.0;
    std::size_t j = 1;
    for (std::size_t i = 0; i < h; ++i) {
        const std::size_t ni = (i + 1) % h;
        while (std::abs(cross(hull[i], hull[ni], hull[(j + 1) % h])) >
               std::abs(cross(hull[i], hull[ni], hull[j])))
            j = (j + 1) % h;
        best = std::max({best, std::abs(hull[i] - hull[j]), std::abs(hull[ni] - hull[j])});
    }
    return best;
}

namespace {

class CurveRefiner {
public:
    CurveRefiner(const AnalyticMap& g, double rho, double gap_tol, const RefinementOptions& opts,
                 std::size_t initial)
        : g_(g), rho_(rho), gap_tol_(gap_tol), opts_(opts), count_(initial)
    {
    }

    Complex at(double theta) const { return g_(std::polar(rho_, theta)); }

    void refine(double ta, Complex wa, double tb, Complex wb, std::vector<CurveSample>& out)
    {
        const double tm = 0.5 * (ta + tb);
        const Complex wm = at(tm);
        const bool short_enough = std::abs(wb - wa) <= gap_tol_;
        const bool flat_enough = std::abs(wm - 0.5 * (wa + wb)) <= opts_.rel_deviation * (1.0 + std::abs(wm));
        if (short_enough && flat_enough) {
            out.push_back({ta, wa});
            return;
        }
        if (tb - ta < 1e-13 || ++count_ > opts_.max_points)
            throw Error(ErrorCode::RefinementLimit, "boundary curve refinement budget exhausted",
                        std::polar(rho_, ta));
        refine(ta, wa, tm, wm, out);
        refine(tm, wm, tb, wb, out);
    }

private:
    const AnalyticMap& g_;
    double rho_;
    double gap_tol_;
    const RefinementOptions& opts_;
    std::size_t count_;
};

} // namespace

ImageCurve boundary_curve(const AnalyticMap& g, double rho, int n, const RefinementOptions& opts)
{
    if (!(rho > 0.0 && rho < 1.0))
        throw Error(ErrorCode::BadParams, "boundary_curve radius must lie in (0, 1)");
    if (n < 3)
        throw Error(ErrorCode::BadParams, "boundary_curve needs at least 3 samples");

    std::vector<double> thetas(static_cast<std::size_t>(n) + 1);
    std::vector<Complex> values(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        thetas[k] = kTwoPi * k / n;
        values[k] = g(std::polar(rho, thetas[k]));
    }
    thetas[n] = kTwoPi;

    const double gap_tol = opts.gap_fraction * point_set_diameter(values);
    CurveRefiner refiner(g, rho, gap_tol, opts, static_cast<std::size_t>(n));

    ImageCurve curve;
    curve.rho = rho;
    curve.samples.reserve(static_cast<std::size_t>(n) * 2);
    for (int k = 0; k < n; ++k)
        refiner.refine(thetas[k], values[k], thetas[k + 1], values[(k + 1) % n], curve.samples);

    double twice_area = 0.0;
    const auto& s = curve.samples;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const Complex a = s[i].w;
        const Complex b = s[(i + 1) % s.size()].w;
        twice_area += a.real() * b.imag() - b.real() * a.imag();
    }
    curve.orientation = twice_area > 0.0 ? 1 : (twice_area < 0.0 ? -1 : 0);
    return curve;
}

int winding_number(const ImageCurve& c, Complex w)
{
    const auto& s = c.samples;
    if (s.size() < 2)
        throw Error(ErrorCode::TooCloseToCurve, "curve has fewer than two samples", w);
    double total = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const Complex a = s[i].w;
        const Complex b = s[(i + 1) % s.size()].w;
        if (segment_distance(a, b, w) <= 1e-9)
            throw Error(ErrorCode::TooCloseToCurve, "point lies within 1e-9 of the curve", w);
        total += std::arg((b - w) / (a - w));
    }
    const double turns = total / kTwoPi;
    const double rounded = std::round(turns);
    if (std::abs(turns - rounded) >= 0.25)
        throw Error(ErrorCode::AmbiguousWinding, "angle sum is not near an integer number of turns", w);
    return static_cast<int>(rounded);
}

// ---------------------------------------------------------------------------
// CurveIndex

CurveIndex::CurveIndex(std::vector<Complex> pts) : pts_(std::move(pts))
{
    const std::size_t n = pts_.size();
    if (n < 2) {
        edges_ = {0.0, 0.0};
        offsets_ = {0, 0};
        return;
    }
    std::vector<double> ys(n);
    for (std::size_t i = 0; i < n; ++i)
        ys[i] = pts_[i].imag();
    std::sort(ys.begin(), ys.end());

    const std::size_t slabs = std::max<std::size_t>(1, n / 4);
    edges_.resize(slabs + 1);
    for (std::size_t j = 0; j <= slabs; ++j)
        edges_[j] = ys[j * (n - 1) / slabs];

    std::vector<std::size_t> counts(slabs, 0);
    auto span_of = [&](std::size_t i) {
        const double y0 = seg_start(i).imag();
        const double y1 = seg_end(i).imag();
        return std::pair{slab_of(std::min(y0, y1)), slab_of(std::max(y0, y1))};
    };
    for (std::size_t i = 0; i < n; ++i) {
        const auto [lo, hi] = span_of(i);
        for (std::size_t j = lo; j <= hi; ++j)
            ++counts[j];
    }
    offsets_.assign(slabs + 1, 0);
    for (std::size_t j = 0; j < slabs; ++j)
        offsets_[j + 1] = offsets_[j] + counts[j];
    members_.resize(offsets_.back());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (std::size_t i = 0; i < n; ++i) {
        const auto [lo, hi] = span_of(i);
        for (std::size_t j = lo; j <= hi; ++j)
            members_[fill[j]++] = i;
    }
}

std::size_t CurveIndex::slab_of(double y) const
{
    const auto it = std::upper_bound(edges_.begin(), edges_.end(), y);
    const auto idx = static_cast<std::ptrdiff_t>(it - edges_.begin()) - 1;
    const auto last = static_cast<std::ptrdiff_t>(edges_.size()) - 2;
    return static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(idx, 0, last));
}

int CurveIndex::winding(Complex w) const
{
    if (pts_.size() < 2 || w.imag() < edges_.front() || w.imag() > edges_.back())
        return 0;
    const std::size_t j = slab_of(w.imag());
    int wn = 0;
    const double wy = w.imag();
    for (std::size_t m = offsets_[j]; m < offsets_[j + 1]; ++m) {
        const std::size_t i = members_[m];
        const Complex a = seg_start(i);
        const Complex b = seg_end(i);
        if (a.imag() <= wy) {
            if (b.imag() > wy && cross(a, b, w) > 0.0)
                ++wn;
        } else if (b.imag() <= wy && cross(a, b, w) < 0.0) {
            --wn;
        }
    }
    return wn;
}

double CurveIndex::distance_within(Complex w, double limit) const
{
    if (pts_.size() < 2)
        return pts_.empty() ? limit : std::min(limit, std::abs(w - pts_[0]));
    const double lo = w.imag() - limit;
    const double hi = w.imag() + limit;
    if (hi < edges_.front() || lo > edges_.back())
        return limit;
    double best = limit;
    for (std::size_t j = slab_of(lo), last = slab_of(hi); j <= last; ++j) {
        for (std::size_t m = offsets_[j]; m < offsets_[j + 1]; ++m) {
            const std::size_t i = members_[m];
            best = std::min(best, segment_distance(seg_start(i), seg_end(i), w));
        }
    }
    return best;
}

double CurveIndex::horizontal_clearance(Complex w) const
{
    double best = std::numeric_limits<double>::infinity();
    if (pts_.size() < 2 || w.imag() < edges_.front() || w.imag() > edges_.back())
        return best;
    const std::size_t j = slab_of(w.imag());
    const double wy = w.imag();
    for (std::size_t m = offsets_[j]; m < offsets_[j + 1]; ++m) {
        const std::size_t i = members_[m];
        const Complex a = seg_start(i);
        const Complex b = seg_end(i);
        if (std::min(a.imag(), b.imag()) > wy || std::max(a.imag(), b.imag()) < wy)
            continue;
        const double dy = b.imag() - a.imag();
        const double x = dy == 0.0 ? std::clamp(w.real(), std::min(a.real(), b.real()), std::max(a.real(), b.real()))
                                   : a.real() + (wy - a.imag()) * (b.real() - a.real()) / dy;
        best = std::min(best, std::abs(x - w.real()));
    }
    return best;
}

bool CurveIndex::self_intersects() const
{
    const std::size_t n = pts_.size();
    if (n < 4)
        return false;
    for (std::size_t j = 0; j + 1 < offsets_.size(); ++j) {
        for (std::size_t m1 = offsets_[j]; m1 < offsets_[j + 1]; ++m1) {
            const std::size_t i = members_[m1];
            const Complex a = seg_start(i);
            const Complex b = seg_end(i);
            for (std::size_t m2 = m1 + 1; m2 < offsets_[j + 1]; ++m2) {
                const std::size_t k = members_[m2];
                const std::size_t d = i > k ? i - k : k - i;
                if (d <= 1 || d == n - 1)
                    continue;
                const Complex c = seg_start(k);
                const Complex e = seg_end(k);
                if (std::max(a.real(), b.real()) < std::min(c.real(), e.real()) ||
                    std::max(c.real(), e.real()) < std::min(a.real(), b.real()))
                    continue;
                const double o1 = cross(a, b, c);
                const double o2 = cross(a, b, e);
                const double o3 = cross(c, e, a);
                const double o4 = cross(c, e, b);
                if (((o1 > 0.0 && o2 < 0.0) || (o1 < 0.0 && o2 > 0.0)) &&
                    ((o3 > 0.0 && o4 < 0.0) || (o3 < 0.0 && o4 > 0.0)))
                    return true;
            }
        }
    }
    return false;
}

// ---------------------------------------------------------------------------

ConditionReport min_real_part(const AnalyticMap& m, const SampleGrid& grid, std::string name)
{
    grid.validate();
    ConditionReport report;
    report.name = std::move(name);
    report.min_value = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < grid.radii.size(); ++r) {
        for (int k = 0; k < grid.angular_count; ++k) {
            const Complex z = grid.point(r, k);
            const double v = m(z).real();
            if (v < report.min_value) {
                report.min_value = v;
                report.argmin = z;
            }
        }
    }
    report.verdict = verdict_for(report.min_value);
    if (report.passed() && report.min_value < 1e-4)
        report.soft_flags.push_back("minimum below 1e-4");
    return report;
}

std::string_view to_string(Outcome o)
{
    switch (o) {
    case Outcome::Holds: return "Holds";
    case Outcome::Fails: return "Fails";
    case Outcome::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

namespace {

struct IndexedCurve {
    std::optional<CurveIndex> index;
    std::string failure;
    bool self_intersecting = false;
};

std::vector<double> rho_ladder(double r)
{
    const double start = std::max(r, 0.9);
    const double hi_gap = 1.0 - start;
    const double lo_gap = 1.0 - kOuterRho;
    if (!(hi_gap > lo_gap))
        return {kOuterRho};
    std::vector<double> ladder(8);
    for (int i = 0; i < 8; ++i)
        ladder[i] = 1.0 - hi_gap * std::pow(lo_gap / hi_gap, i / 7.0);
    ladder.back() = kOuterRho;
    return ladder;
}

enum class PointState { Inside, Outside, Close };

PointState classify(const CurveIndex& idx, Complex w, double* clearance)
{
    const double tol = clearance_tolerance(w);
    const double d = idx.distance_within(w, tol);
    if (d < tol)
        return PointState::Close;
    const int wn = idx.winding(w);
    if (wn == 1)
        return PointState::Inside;
    if (wn == 0) {
        if (clearance)
            *clearance = idx.horizontal_clearance(w);
        return PointState::Outside;
    }
    return PointState::Close;
}

} // namespace

SubordinationVerdict test_subordination(const AnalyticMap& f, const AnalyticMap& g, const SampleGrid& grid)
{
    grid.validate();
    SubordinationVerdict verdict;

    Complex f0;
    Complex g0;
    try {
        f0 = f(0.0);
        g0 = g(0.0);
    } catch (const Error& e) {
        verdict.detail = std::string("evaluation at 0 failed: ") + e.what();
        return verdict;
    }
    if (std::abs(f0 - g0) > kCenterTolerance) {
        verdict.outcome = Outcome::Fails;
        verdict.witness_z = Complex{};
        verdict.witness_w = f0;
        verdict.detail = "CenterMismatch: f(0) != g(0)";
        return verdict;
    }

    std::map<double, IndexedCurve> curves;
    auto curve_at = [&](double rho) -> const IndexedCurve& {
        auto [it, inserted] = curves.try_emplace(rho);
        if (inserted) {
            try {
                auto curve = boundary_curve(g, rho, grid.angular_count);
                it->second.index.emplace(curve.points());
                it->second.self_intersecting = it->second.index->self_intersects();
            } catch (const Error& e) {
                it->second.failure = e.what();
            }
        }
        return it->second;
    };

    bool inconclusive = false;
    std::string inconclusive_detail;
    double best_clearance = -1.0;
    std::vector<Complex> values(static_cast<std::size_t>(grid.angular_count));

    for (std::size_t r = 0; r < grid.radii.size(); ++r) {
        try {
            for (int k = 0; k < grid.angular_count; ++k)
                values[k] = f(grid.point(r, k));
        } catch (const Error& e) {
            verdict.outcome = Outcome::Inconclusive;
            verdict.detail = std::string("f evaluation failed: ") + e.what();
            return verdict;
        }

        // Containment at a smaller rho is cheaper to certify; the outer curve
        // is only consulted for witnesses once the first rung fails.
        const auto ladder = rho_ladder(grid.radii[r]);
        std::optional<double> self_intersection;
        auto usable = [&](double rho) -> const CurveIndex* {
            const IndexedCurve& c = curve_at(rho);
            if (c.self_intersecting)
                self_intersection = rho;
            return c.index && !c.self_intersecting ? &*c.index : nullptr;
        };
        auto contains_all = [&](const CurveIndex* idx) {
            return idx && std::all_of(values.begin(), values.end(), [&](Complex w) {
                       return classify(*idx, w, nullptr) == PointState::Inside;
                   });
        };

        bool held = contains_all(usable(ladder.front()));
        bool failed = false;
        if (!held && !self_intersection) {
            const CurveIndex* outer = usable(kOuterRho);
            if (outer) {
                for (int k = 0; k < grid.angular_count; ++k) {
                    double clearance = 0.0;
                    if (classify(*outer, values[k], &clearance) == PointState::Outside) {
                        failed = true;
                        if (clearance > best_clearance) {
                            best_clearance = clearance;
                            verdict.witness_z = grid.point(r, k);
                            verdict.witness_w = values[k];
                        }
                    }
                }
            }
            for (std::size_t i = 1; !failed && !held && !self_intersection && i < ladder.size(); ++i)
                held = contains_all(usable(ladder[i]));
            if (!held && !failed && !self_intersection) {
                inconclusive = true;
                inconclusive_detail = outer ? "f-values within clearance of the image boundary at r=" +
                                                  std::to_string(grid.radii[r])
                                            : "outer image curve unavailable: " + curve_at(kOuterRho).failure;
            }
        }
        if (self_intersection) {
            verdict = {};
            verdict.detail = "image of g self-intersects at rho=" + std::to_string(*self_intersection) +
                             " (univalence proxy failed)";
            return verdict;
        }
    }

    if (best_clearance >= 0.0) {
        verdict.outcome = Outcome::Fails;
        verdict.detail = "f-value outside g(|z|=1-1e-6)";
    } else if (inconclusive) {
        verdict.outcome = Outcome::Inconclusive;
        verdict.detail = inconclusive_detail;
    } else {
        verdict.outcome = Outcome::Holds;
        verdict.detail = "all sampled f-values inside the image of g";
    }
    return verdict;
}

} // namespace subord
