#pragma once

#include "subord/analytic_map.hpp"

#include <cstdint>
#include <vector>

namespace subord {

struct ParamSet;

struct JanowskiParams {
    double A = 0.0;
    double B = 0.0;

    /// Throws BadParams unless -1 < B < A <= 1.
    void validate() const;
};

/// (1 + Az)/(1 + Bz).
AnalyticMap janowski(const JanowskiParams& jp);

AnalyticMap cayley();
/// z/(1 - z)^2.
AnalyticMap koebe();

struct ClosedFormConditions {
    bool first = false;
    bool second = false;
};

/// The two closed-form sufficient conditions for a Janowski function to lie in
/// the class and satisfy the dominant hypotheses:
///
///   Re delta + (1-A)/(1-B) > (A-B) / ((1-B) * | |beta+gamma| - |beta A + gamma B| |)
///   (1-2A)/(1-A)          > |beta A + gamma B| / (|beta+gamma| - |beta A + gamma B|)
///
/// Throws DegenerateDenominator when either right-hand side (or 1-A) has a
/// denominator within 1e-12 of zero.
ClosedFormConditions example21_membership(const JanowskiParams& jp, const ParamSet& ps);

/// The normalized g with zg'/g = q for a Janowski q: z(1+Bz)^((A-B)/B), or
/// z e^{Az} when B = 0. Throws UnsupportedQ if q does not agree with
/// janowski(jp) at a set of probe points.
AnalyticMap g_from_q(const AnalyticMap& q, const JanowskiParams& jp);

struct SchwarzSpec {
    std::uint64_t seed = 0;
    int degree = 1;
    double contraction = 0.5;

    /// Throws BadParams unless degree >= 1 and 0 < contraction < 1.
    void validate() const;
};

/// contraction * z * P(z) / max|P| with max|P| sampled on |z| = 0.999 and P of
/// degree spec.degree - 1 with coefficients uniform in [-1,1]^2.
AnalyticMap random_schwarz(const SchwarzSpec& spec);

/// Same normalization for explicit coefficients c0 + c1 z + ... .
AnalyticMap schwarz_from_coefficients(const std::vector<Complex>& coeffs, double contraction);

/// Sampled max |m| on |z| = r over 4096 equally spaced angles.
double sampled_sup(const AnalyticMap& m, double r);

} // namespace subord
