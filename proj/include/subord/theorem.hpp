#pragma once

#include "subord/analytic_map.hpp"
#include "subord/condition.hpp"
#include "subord/disk_geometry.hpp"
#include "subord/params.hpp"

#include <string>
#include <vector>

namespace subord {

/// Bracket p + delta + z p' / (beta p + gamma) inside the transform.
AnalyticMap transform_bracket(const AnalyticMap& p, const ParamSet& ps);

/// P = p^alpha (p + delta + z p'/(beta p + gamma))^mu with principal powers.
AnalyticMap transform_P(const AnalyticMap& p, const ParamSet& ps);

/// p^(a+1) + delta p^a + p^a z p'/(beta p + gamma) with a = alpha/mu; equals
/// P^(1/mu) wherever the branches agree.
AnalyticMap transform_flat(const AnalyticMap& p, const ParamSet& ps);

/// Domain checks for p in the class over the grid: p(0) = 1, p != 0,
/// beta p + gamma != 0 and, for non-integral exponents, p and the bracket stay
/// off the branch cut, neither at a sample nor along the chord between
/// neighbouring samples on a circle. min_value is the worst margin (each margin is measured
/// against its own threshold, so passing means min_value > 0). Evaluation
/// errors count as margin -1. Throws CenterMismatch if |p(0) - 1| > 1e-9.
ConditionReport class_membership(const AnalyticMap& p, const ParamSet& ps, const SampleGrid& grid);

/// The grid radii extended by 0.9999, 0.99999 and 1 - 1e-6 (those beyond the
/// last radius). The subordination test samples image curves out to
/// 1 - 1e-6, so the harnesses check class membership that far.
SampleGrid membership_grid(const SampleGrid& grid);

struct AuxiliaryTriple {
    /// z q' / (beta q + gamma)
    AnalyticMap R;
    /// q^(alpha/mu) R
    AnalyticMap Q;
    /// q^(alpha/mu + 1) + delta q^(alpha/mu) + Q
    AnalyticMap h;
};

AuxiliaryTriple build_auxiliaries(const AnalyticMap& q, const ParamSet& ps);

/// Grid for conditions with a removable singularity at z = 0: the grid radii
/// preceded by radii[0]/8, radii[0]/4, radii[0]/2.
SampleGrid punctured_grid(const SampleGrid& grid);

/// Three reports, in order:
///   cond-2.2    Re((beta q + gamma)(1 + alpha/mu + alpha delta/(mu q))) > 0
///   cond-2.3    Re((alpha/mu) z q'/q + z R'/R) > 0
///   Q-starlike  Re(z Q'/Q) > 0
/// The last two are sampled on punctured_grid(grid). Evaluation errors
/// propagate with their grid point.
std::vector<ConditionReport> check_hypotheses(const AnalyticMap& q, const ParamSet& ps, const SampleGrid& grid);

struct TheoremVerdict {
    std::string theorem;
    SubordinationVerdict premise;
    std::vector<ConditionReport> hypotheses;
    SubordinationVerdict conclusion;
    bool consistent = true;
    /// Hypotheses all pass and the implication could not be exercised: the
    /// premise is Inconclusive, or it Holds while the conclusion is.
    bool inconclusive = false;
    /// Assumptions taken without checking (membership in the class Q).
    std::vector<std::string> assumptions;
    std::vector<std::string> flags;

    bool hypotheses_pass() const;
};

/// p < q from P(p) < P(q).
TheoremVerdict verify_dominant(const AnalyticMap& p, const AnalyticMap& q, const ParamSet& ps,
                               const SampleGrid& grid);

/// q < p from P(q) < P(p). The flat form of p must pass the boundary
/// self-intersection scan, otherwise the premise is Inconclusive.
TheoremVerdict verify_subordinant(const AnalyticMap& p, const AnalyticMap& q, const ParamSet& ps,
                                  const SampleGrid& grid);

/// q1 < p < q2 from P(q1) < P(p) < P(q2).
TheoremVerdict verify_sandwich(const AnalyticMap& p, const AnalyticMap& q1, const AnalyticMap& q2,
                               const ParamSet& ps, const SampleGrid& grid);

} // namespace subord
