#include "subord/families.hpp"

#include "subord/params.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace subord {

void JanowskiParams::validate() const
{
    if (!(std::isfinite(A) && std::isfinite(B) && -1.0 < B && B < A && A <= 1.0))
        throw Error(ErrorCode::BadParams, "Janowski parameters need -1 < B < A <= 1");
}

AnalyticMap janowski(const JanowskiParams& jp)
{
    jp.validate();
    return (1.0 + jp.A * z_map()) / (1.0 + jp.B * z_map());
}

AnalyticMap cayley() { return (1.0 + z_map()) / (1.0 - z_map()); }

AnalyticMap koebe() { return z_map() * pow(1.0 - z_map(), -2.0); }

namespace {

constexpr double kDegenerate = 1e-12;

double checked_denominator(double d, const char* what)
{
    if (std::abs(d) <= kDegenerate)
        throw Error(ErrorCode::DegenerateDenominator, what);
    return d;
}

} // namespace

ClosedFormConditions example21_membership(const JanowskiParams& jp, const ParamSet& ps)
{
    jp.validate();
    const double A = jp.A;
    const double B = jp.B;
    const double s = std::abs(ps.beta + ps.gamma);
    const double t = std::abs(ps.beta * A + ps.gamma * B);

    ClosedFormConditions out;
    const double d1 = checked_denominator(std::abs(s - t), "| |beta+gamma| - |beta A + gamma B| | is zero");
    out.first = ps.delta.real() + (1.0 - A) / (1.0 - B) > (A - B) / ((1.0 - B) * d1);

    const double d2 = checked_denominator(s - t, "|beta+gamma| - |beta A + gamma B| is zero");
    const double one_minus_a = checked_denominator(1.0 - A, "1 - A is zero");
    out.second = (1.0 - 2.0 * A) / one_minus_a > t / d2;
    return out;
}

AnalyticMap g_from_q(const AnalyticMap& q, const JanowskiParams& jp)
{
    const auto ref = janowski(jp);
    for (double r : {0.0, 0.3, 0.7, 0.95}) {
        for (int k = 0; k < 8; ++k) {
            const Complex z = std::polar(r, 2.0 * std::numbers::pi * k / 8 + 0.1);
            Complex a;
            try {
                a = q(z);
            } catch (const Error&) {
                throw Error(ErrorCode::UnsupportedQ, "q is not evaluable at a probe point", z);
            }
            const Complex b = ref(z);
            if (std::abs(a - b) > 1e-12 * (1.0 + std::abs(b)))
                throw Error(ErrorCode::UnsupportedQ, "q is not the Janowski function with the given A, B", z);
        }
    }
    if (jp.B == 0.0)
        return z_map() * exp(jp.A * z_map());
    return z_map() * pow(1.0 + jp.B * z_map(), (jp.A - jp.B) / jp.B);
}

void SchwarzSpec::validate() const
{
    if (degree < 1)
        throw Error(ErrorCode::BadParams, "Schwarz degree must be at least 1");
    if (!(contraction > 0.0 && contraction < 1.0))
        throw Error(ErrorCode::BadParams, "Schwarz contraction must lie in (0, 1)");
}

double sampled_sup(const AnalyticMap& m, double r)
{
    constexpr int n = 4096;
    double sup = 0.0;
    for (int k = 0; k < n; ++k)
        sup = std::max(sup, std::abs(m(std::polar(r, 2.0 * std::numbers::pi * k / n))));
    return sup;
}

AnalyticMap schwarz_from_coefficients(const std::vector<Complex>& coeffs, double contraction)
{
    if (coeffs.empty())
        throw Error(ErrorCode::BadParams, "Schwarz polynomial needs at least one coefficient");
    if (!(contraction > 0.0 && contraction < 1.0))
        throw Error(ErrorCode::BadParams, "Schwarz contraction must lie in (0, 1)");

    // Horner form c0 + z(c1 + z(c2 + ...)).
    AnalyticMap poly = constant(coeffs.back());
    for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it)
        poly = *it + z_map() * poly;

    const double sup = sampled_sup(poly, 0.999);
    if (!(sup > 0.0))
        throw Error(ErrorCode::BadParams, "Schwarz polynomial vanishes on the sampling circle");
    return (contraction / sup) * z_map() * poly;
}

AnalyticMap random_schwarz(const SchwarzSpec& spec)
{
    spec.validate();
    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Complex> coeffs(static_cast<std::size_t>(spec.degree));
    for (auto& c : coeffs) {
        const double re = u(rng);
        const double im = u(rng);
        c = {re, im};
    }
    return schwarz_from_coefficients(coeffs, spec.contraction);
}

} // namespace subord
