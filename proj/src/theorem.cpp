#include "subord/theorem.hpp"

#include "subord/complex_math.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

namespace subord {

AnalyticMap transform_bracket(const AnalyticMap& p, const ParamSet& ps)
{
    return p + ps.delta + z_map() * differentiate(p) / (ps.beta * p + ps.gamma);
}

AnalyticMap transform_P(const AnalyticMap& p, const ParamSet& ps)
{
    return pow(p, ps.alpha) * pow(transform_bracket(p, ps), ps.mu);
}

AnalyticMap transform_flat(const AnalyticMap& p, const ParamSet& ps)
{
    const double a = ps.ratio();
    const auto pa = pow(p, a);
    return pow(p, a + 1.0) + ps.delta * pa + pa * (z_map() * differentiate(p) / (ps.beta * p + ps.gamma));
}

namespace {

constexpr double kZeroMargin = 1e-9;
constexpr double kSoftBranchMargin = kSoftCutMargin;

std::string at(Complex z)
{
    std::ostringstream os;
    os.precision(6);
    os << "(" << z.real() << ", " << z.imag() << ")";
    return os.str();
}

// The chord from a to b meets the ray (-inf, 0].
bool chord_crosses_cut(Complex a, Complex b)
{
    if ((a.imag() > 0.0) == (b.imag() > 0.0) || a.imag() == b.imag())
        return false;
    const double x = a.real() + (b.real() - a.real()) * a.imag() / (a.imag() - b.imag());
    return x <= 0.0;
}

void check_center(const AnalyticMap& p)
{
    const Complex p0 = p(0.0);
    if (std::abs(p0 - 1.0) > kZeroMargin)
        throw Error(ErrorCode::CenterMismatch, "p(0) must equal 1", Complex{});
}

} // namespace

ConditionReport class_membership(const AnalyticMap& p, const ParamSet& ps, const SampleGrid& grid)
{
    ps.validate();
    grid.validate();
    check_center(p);

    const bool alpha_cut = !is_integral_exponent(ps.alpha);
    const bool mu_cut = !is_integral_exponent(ps.mu);
    const auto bracket = transform_bracket(p, ps);

    ConditionReport report;
    report.name = "class-membership";
    report.min_value = std::numeric_limits<double>::infinity();
    bool flagged_p = false;
    bool flagged_bracket = false;
    bool flagged_error = false;

    auto consider = [&](double margin, Complex z) {
        if (margin < report.min_value) {
            report.min_value = margin;
            report.argmin = z;
        }
    };

    // Samples on one circle, kept to detect the image crossing the cut between
    // neighbouring angles, which no pointwise margin can see.
    std::vector<std::optional<Complex>> p_ring(static_cast<std::size_t>(grid.angular_count));
    std::vector<std::optional<Complex>> b_ring(p_ring.size());
    bool flagged_crossing = false;
    auto scan_crossings = [&](const std::vector<std::optional<Complex>>& ring, std::size_t r, const char* what) {
        for (std::size_t k = 0; k < ring.size(); ++k) {
            const auto& a = ring[k];
            const auto& b = ring[(k + 1) % ring.size()];
            if (a && b && chord_crosses_cut(*a, *b)) {
                const Complex z = grid.point(r, static_cast<int>(k));
                consider(-kHardCutMargin, z);
                if (!flagged_crossing) {
                    report.soft_flags.push_back(std::string(what) + " crosses the branch cut near z=" + at(z));
                    flagged_crossing = true;
                }
            }
        }
    };

    for (std::size_t r = 0; r < grid.radii.size(); ++r) {
        std::fill(p_ring.begin(), p_ring.end(), std::nullopt);
        std::fill(b_ring.begin(), b_ring.end(), std::nullopt);
        for (int k = 0; k < grid.angular_count; ++k) {
            const Complex z = grid.point(r, k);
            try {
                const Complex pv = p(z);
                p_ring[static_cast<std::size_t>(k)] = pv;
                consider(std::abs(pv) - kZeroMargin, z);
                consider(std::abs(ps.beta * pv + ps.gamma) - kZeroMargin, z);
                if (alpha_cut) {
                    const double m = branch_margin(pv);
                    consider(m - kHardCutMargin, z);
                    if (m < kSoftBranchMargin && !flagged_p) {
                        report.soft_flags.push_back("p within 1e-3 of the branch cut at z=" + at(z));
                        flagged_p = true;
                    }
                }
                const Complex bv = bracket(z);
                b_ring[static_cast<std::size_t>(k)] = bv;
                if (mu_cut) {
                    const double m = branch_margin(bv);
                    consider(m - kHardCutMargin, z);
                    if (m < kSoftBranchMargin && !flagged_bracket) {
                        report.soft_flags.push_back("bracket within 1e-3 of the branch cut at z=" + at(z));
                        flagged_bracket = true;
                    }
                }
            } catch (const Error& e) {
                if (!e.is_evaluation_error())
                    throw;
                consider(-1.0, z);
                if (!flagged_error) {
                    report.soft_flags.push_back(std::string("evaluation failed: ") + e.what());
                    flagged_error = true;
                }
            }
        }
        if (alpha_cut)
            scan_crossings(p_ring, r, "p");
        if (mu_cut)
            scan_crossings(b_ring, r, "bracket");
    }
    report.verdict = verdict_for(report.min_value);
    return report;
}

SampleGrid membership_grid(const SampleGrid& grid)
{
    SampleGrid out = grid;
    for (double r : {0.9999, 0.99999, kOuterRho})
        if (r > out.radii.back())
            out.radii.push_back(r);
    return out;
}

AuxiliaryTriple build_auxiliaries(const AnalyticMap& q, const ParamSet& ps)
{
    const double a = ps.ratio();
    AuxiliaryTriple aux;
    aux.R = z_map() * differentiate(q) / (ps.beta * q + ps.gamma);
    aux.Q = pow(q, a) * aux.R;
    aux.h = pow(q, a + 1.0) + ps.delta * pow(q, a) + aux.Q;
    return aux;
}

SampleGrid punctured_grid(const SampleGrid& grid)
{
    SampleGrid out = grid;
    const double r0 = grid.radii.front();
    out.radii.insert(out.radii.begin(), {r0 / 8.0, r0 / 4.0, r0 / 2.0});
    return out;
}

std::vector<ConditionReport> check_hypotheses(const AnalyticMap& q, const ParamSet& ps, const SampleGrid& grid)
{
    ps.validate();
    grid.validate();
    const double a = ps.ratio();
    const auto aux = build_auxiliaries(q, ps);
    const auto z = z_map();

    const auto c22 = (ps.beta * q + ps.gamma) * ((1.0 + a) + (ps.alpha * ps.delta / ps.mu) / q);
    const auto c23 = a * z * differentiate(q) / q + z * differentiate(aux.R) / aux.R;
    const auto qstar = z * differentiate(aux.Q) / aux.Q;

    const auto punctured = punctured_grid(grid);
    return {
        min_real_part(c22, grid, "cond-2.2"),
        min_real_part(c23, punctured, "cond-2.3"),
        min_real_part(qstar, punctured, "Q-starlike"),
    };
}

bool TheoremVerdict::hypotheses_pass() const
{
    return std::all_of(hypotheses.begin(), hypotheses.end(), [](const ConditionReport& r) { return r.passed(); });
}

namespace {

ConditionReport error_report(std::string name, const Error& e)
{
    ConditionReport r;
    r.name = std::move(name);
    r.min_value = -std::numeric_limits<double>::infinity();
    r.argmin = e.point().value_or(Complex{});
    r.verdict = Verdict::Fail;
    r.soft_flags.push_back(std::string("evaluation failed: ") + e.what());
    return r;
}

void add_membership(TheoremVerdict& v, const std::string& label, const AnalyticMap& m, const ParamSet& ps,
                    const SampleGrid& grid)
{
    const std::string name = label + ":class-membership";
    try {
        auto r = class_membership(m, ps, membership_grid(grid));
        r.name = name;
        v.hypotheses.push_back(std::move(r));
    } catch (const Error& e) {
        if (!e.is_evaluation_error() && e.code() != ErrorCode::CenterMismatch)
            throw;
        v.hypotheses.push_back(error_report(name, e));
    }
}

void add_hypotheses(TheoremVerdict& v, const std::string& label, const AnalyticMap& q, const ParamSet& ps,
                    const SampleGrid& grid)
{
    try {
        for (auto& r : check_hypotheses(q, ps, grid)) {
            r.name = label + ":" + r.name;
            v.hypotheses.push_back(std::move(r));
        }
    } catch (const Error& e) {
        if (!e.is_evaluation_error())
            throw;
        v.hypotheses.push_back(error_report(label + ":hypotheses", e));
    }
}

// Fails beats Inconclusive beats Holds; the detail names the failing leg.
SubordinationVerdict combine(const SubordinationVerdict& left, const SubordinationVerdict& right)
{
    for (Outcome o : {Outcome::Fails, Outcome::Inconclusive}) {
        if (left.outcome == o || right.outcome == o) {
            SubordinationVerdict out = left.outcome == o ? left : right;
            out.detail = std::string(left.outcome == o ? "left: " : "right: ") + out.detail;
            return out;
        }
    }
    SubordinationVerdict out;
    out.outcome = Outcome::Holds;
    out.detail = "both subordinations hold";
    return out;
}

// Boundary self-intersection scan of the flat form of p on the outermost grid
// circle. Returns a description of the failure, or empty when the scan passes.
std::string flat_univalence_failure(const AnalyticMap& p, const ParamSet& ps, const SampleGrid& grid)
{
    try {
        const auto curve = boundary_curve(transform_flat(p, ps), grid.radii.back(), grid.angular_count);
        if (CurveIndex(curve.points()).self_intersects())
            return "flat form of p self-intersects on |z|=" + std::to_string(grid.radii.back()) +
                   " (univalence proxy failed)";
    } catch (const Error& e) {
        return std::string("flat form of p could not be sampled: ") + e.what();
    }
    return {};
}

void finish(TheoremVerdict& v)
{
    const bool hyps = v.hypotheses_pass();
    v.consistent = !(hyps && v.premise.outcome == Outcome::Holds && v.conclusion.outcome == Outcome::Fails);
    v.inconclusive = hyps && (v.premise.outcome == Outcome::Inconclusive ||
                              (v.premise.outcome == Outcome::Holds && v.conclusion.outcome == Outcome::Inconclusive));
    for (const auto& r : v.hypotheses)
        for (const auto& f : r.soft_flags)
            v.flags.push_back(r.name + ": " + f);
}

const char* kQAssumption = "p is assumed to lie in the class Q (injective on the closed disk minus its "
                           "exceptional boundary set, p' != 0 there); this is not checked";
const char* kUnivalenceNote = "univalence of the dominating maps is proxied by boundary self-intersection scans";

} // namespace

TheoremVerdict verify_dominant(const AnalyticMap& p, const AnalyticMap& q, const ParamSet& ps,
                               const SampleGrid& grid)
{
    ps.validate();
    grid.validate();
    TheoremVerdict v;
    v.theorem = "dominant";
    add_membership(v, "p", p, ps, grid);
    add_membership(v, "q", q, ps, grid);
    add_hypotheses(v, "q", q, ps, grid);
    v.assumptions.push_back(kUnivalenceNote);
    v.premise = test_subordination(transform_P(p, ps), transform_P(q, ps), grid);
    v.conclusion = test_subordination(p, q, grid);
    finish(v);
    return v;
}

TheoremVerdict verify_subordinant(const AnalyticMap& p, const AnalyticMap& q, const ParamSet& ps,
                                  const SampleGrid& grid)
{
    ps.validate();
    grid.validate();
    TheoremVerdict v;
    v.theorem = "subordinant";
    add_membership(v, "p", p, ps, grid);
    add_membership(v, "q", q, ps, grid);
    add_hypotheses(v, "q", q, ps, grid);
    v.assumptions.push_back(kQAssumption);
    v.assumptions.push_back(kUnivalenceNote);

    if (auto failure = flat_univalence_failure(p, ps, grid); !failure.empty()) {
        v.premise.outcome = Outcome::Inconclusive;
        v.premise.detail = failure;
        v.flags.push_back(failure);
    } else {
        v.premise = test_subordination(transform_P(q, ps), transform_P(p, ps), grid);
    }
    v.conclusion = test_subordination(q, p, grid);
    finish(v);
    return v;
}

TheoremVerdict verify_sandwich(const AnalyticMap& p, const AnalyticMap& q1, const AnalyticMap& q2,
                               const ParamSet& ps, const SampleGrid& grid)
{
    ps.validate();
    grid.validate();
    TheoremVerdict v;
    v.theorem = "sandwich";
    add_membership(v, "p", p, ps, grid);
    add_membership(v, "q1", q1, ps, grid);
    add_membership(v, "q2", q2, ps, grid);
    add_hypotheses(v, "q1", q1, ps, grid);
    add_hypotheses(v, "q2", q2, ps, grid);
    v.assumptions.push_back(kQAssumption);
    v.assumptions.push_back(kUnivalenceNote);

    const auto Pp = transform_P(p, ps);
    if (auto failure = flat_univalence_failure(p, ps, grid); !failure.empty()) {
        v.premise.outcome = Outcome::Inconclusive;
        v.premise.detail = failure;
        v.flags.push_back(failure);
    } else {
        v.premise = combine(test_subordination(transform_P(q1, ps), Pp, grid),
                            test_subordination(Pp, transform_P(q2, ps), grid));
    }
    v.conclusion = combine(test_subordination(q1, p, grid), test_subordination(p, q2, grid));
    finish(v);
    return v;
}

} // namespace subord
