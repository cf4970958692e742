#include "subord/applications.hpp"

#include "subord/complex_math.hpp"

#include <algorithm>
#include <cmath>

namespace subord {

std::string_view to_string(ApplicationKind k)
{
    switch (k) {
    case ApplicationKind::Theorem31: return "theorem31";
    case ApplicationKind::Cor31: return "cor31";
    case ApplicationKind::Cor32: return "cor32";
    case ApplicationKind::Cor33: return "cor33";
    case ApplicationKind::Philike: return "philike";
    }
    return "philike";
}

std::optional<AnalyticMap> factor_z(const AnalyticMap& m)
{
    using Kind = AnalyticMap::Kind;
    switch (m.kind()) {
    case Kind::Identity:
        return constant(1.0);
    case Kind::Product:
        if (auto u = factor_z(m.lhs()))
            return *u * m.rhs();
        if (auto u = factor_z(m.rhs()))
            return m.lhs() * *u;
        return std::nullopt;
    case Kind::Quotient:
        if (auto u = factor_z(m.lhs()))
            return *u / m.rhs();
        return std::nullopt;
    case Kind::Sum:
    case Kind::Difference: {
        auto a = factor_z(m.lhs());
        auto b = factor_z(m.rhs());
        if (!a || !b)
            return std::nullopt;
        return m.kind() == Kind::Sum ? *a + *b : *a - *b;
    }
    case Kind::Power: {
        const Complex c = m.value();
        if (!is_integral_exponent(c) || c.real() < 1.0)
            return std::nullopt;
        auto u = factor_z(m.lhs());
        if (!u)
            return std::nullopt;
        const double n = std::round(c.real());
        if (n == 1.0)
            return *u;
        return pow(z_map(), n - 1.0) * pow(*u, n);
    }
    case Kind::Compose: {
        auto outer = factor_z(m.lhs());
        auto inner = factor_z(m.rhs());
        if (!outer || !inner)
            return std::nullopt;
        return *inner * compose(*outer, m.rhs());
    }
    default:
        return std::nullopt;
    }
}

namespace {

constexpr double kNormalizationTolerance = 1e-9;

bool normalized(const AnalyticMap& m)
{
    try {
        return std::abs(m(0.0)) <= kNormalizationTolerance &&
               std::abs(differentiate(m)(0.0) - 1.0) <= kNormalizationTolerance;
    } catch (const Error&) {
        return false;
    }
}

void require_normalized(const AnalyticMap& f)
{
    if (!normalized(f))
        throw Error(ErrorCode::NotNormalized, "f must satisfy f(0) = 0 and f'(0) = 1");
}

// 1 + zf''/f'
AnalyticMap convexity_term(const AnalyticMap& f)
{
    const auto d = differentiate(f);
    return 1.0 + z_map() * differentiate(d) / d;
}

} // namespace

AnalyticMap starlike_ratio(const AnalyticMap& f)
{
    require_normalized(f);
    if (auto u = factor_z(f))
        return 1.0 + z_map() * differentiate(*u) / *u;
    return z_map() * differentiate(f) / f;
}

ApplicationExpr theorem31_expr(const AnalyticMap& f, const ParamSet& ps)
{
    if (!ps.lambda)
        throw Error(ErrorCode::BadParams, "lambda is required");
    const Complex lambda = *ps.lambda;
    const auto p = starlike_ratio(f);
    const auto inner = (1.0 - lambda) * p + lambda * convexity_term(f);
    return {ApplicationKind::Theorem31, pow(p, ps.alpha) * pow(inner, ps.mu), p};
}

ApplicationExpr corollary_expr(const AnalyticMap& f, ApplicationKind which, Complex alpha)
{
    const auto p = starlike_ratio(f);
    const auto convex = convexity_term(f);
    switch (which) {
    case ApplicationKind::Cor31:
        return {which, (1.0 - alpha) * p + alpha * convex, p};
    case ApplicationKind::Cor32:
        return {which, convex / p, p};
    case ApplicationKind::Cor33: {
        const auto d = differentiate(f);
        return {which, p * (1.0 + alpha * z_map() * differentiate(d) / d), p};
    }
    default:
        throw Error(ErrorCode::BadParams, "corollary selector must be cor31, cor32 or cor33");
    }
}

ApplicationExpr philike_expr(const AnalyticMap& f, const AnalyticMap& Phi, Complex alpha)
{
    require_normalized(f);
    if (!normalized(Phi))
        throw Error(ErrorCode::PhiNotNormalized, "Phi must satisfy Phi(0) = 0 and Phi'(0) = 1");

    const auto df = differentiate(f);
    const auto phi_f = compose(Phi, f);
    const auto d_phi_f = differentiate(phi_f);

    // z / Phi(f) = 1 / (u psi(f)) when f = z u and Phi(w) = w psi(w).
    AnalyticMap z_over_phi_f;
    const auto u = factor_z(f);
    const auto psi = factor_z(Phi);
    if (u && psi)
        z_over_phi_f = 1.0 / (*u * compose(*psi, f));
    else
        z_over_phi_f = z_map() / phi_f;

    const auto p = df * z_over_phi_f;
    const auto bracket =
        1.0 + alpha * z_map() * differentiate(df) / df + alpha * (df - d_phi_f) * z_over_phi_f;
    return {ApplicationKind::Philike, p * bracket, p};
}

double philike_identity_residual(const AnalyticMap& f, const AnalyticMap& Phi, Complex alpha,
                                 const SampleGrid& grid)
{
    grid.validate();
    const auto app = philike_expr(f, Phi, alpha);
    const auto& p = app.ratio;
    const auto rhs = alpha * p * p + (1.0 - alpha) * p + alpha * z_map() * differentiate(p);
    double worst = 0.0;
    for (std::size_t r = 0; r < grid.radii.size(); ++r)
        for (int k = 0; k < grid.angular_count; ++k) {
            const Complex z = grid.point(r, k);
            worst = std::max(worst, std::abs(app.expr(z) - rhs(z)));
        }
    return worst;
}

} // namespace subord
