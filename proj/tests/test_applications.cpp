#include "doctest.h"

#include "subord/applications.hpp"
#include "subord/complex_math.hpp"
#include "subord/families.hpp"
#include "subord/theorem.hpp"
#include "support/app_fixtures.hpp"
#include "support/random_tree.hpp"

#include <cmath>
#include <random>

using namespace subord;

namespace {

const AnalyticMap kZ = z_map();
const AnalyticMap kGeometric = z_map() / (1.0 - z_map());

} // namespace

TEST_CASE("factor_z")
{
    CHECK(factor_z(kZ).has_value());
    CHECK(factor_z(kGeometric).has_value());
    CHECK(factor_z(koebe()).has_value());
    CHECK(factor_z(kZ + kZ * kZ).has_value());
    CHECK(factor_z(pow(2.0 * kZ, 3.0)).has_value());
    CHECK(factor_z(compose(kGeometric, 0.5 * kZ)).has_value());
    CHECK_FALSE(factor_z(1.0 + kZ).has_value());
    CHECK_FALSE(factor_z(pow(kZ, 0.5)).has_value());
    CHECK_FALSE(factor_z(exp(kZ) - 1.0).has_value());

    const Complex z{0.3, 0.2};
    for (const auto& fx : testing::normalized_functions()) {
        const auto u = factor_z(fx.f);
        REQUIRE(u.has_value());
        CHECK(std::abs(z * (*u)(z) - fx.f(z)) < 1e-14);
    }
}

TEST_CASE("starlike_ratio fixtures")
{
    CHECK(std::abs(starlike_ratio(kGeometric)(0.5) - 2.0) < 1e-14);
    CHECK(std::abs(starlike_ratio(kZ)(0.37) - 1.0) < 1e-15);
    const auto k = starlike_ratio(koebe());
    CHECK(std::abs(k(0.0) - 1.0) < 1e-15);
    const auto cay = cayley();
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        const Complex z = testing::random_disk_point(rng, 0.95);
        CHECK(std::abs(k(z) - cay(z)) <= 1e-12 * (1.0 + std::abs(cay(z))));
    }
    // no visible factor of z: the quotient is built directly
    const auto e = exp(kZ) - 1.0;
    CHECK(std::abs(starlike_ratio(e)(0.5) - 0.5 * std::exp(0.5) / (std::exp(0.5) - 1.0)) < 1e-14);

    CHECK_THROWS_AS(starlike_ratio(1.0 + kZ), Error);
    CHECK_THROWS_AS(starlike_ratio(2.0 * kZ), Error);
}

TEST_CASE("theorem31_expr fixtures")
{
    ParamSet ps;
    ps.alpha = 0.0;
    ps.mu = 1.0;
    ps.lambda = 1.0;
    const auto app = theorem31_expr(kGeometric, ps);
    CHECK(app.kind == ApplicationKind::Theorem31);
    CHECK(std::abs(app.expr(0.5) - 3.0) < 1e-14);
    CHECK(std::abs(app.ratio(0.5) - 2.0) < 1e-14);

    ParamSet other;
    other.alpha = 0.7;
    other.mu = 0.4;
    other.lambda = Complex(0.3, 0.5);
    const auto id = theorem31_expr(kZ, other);
    CHECK(std::abs(id.expr(0.4) - 1.0) < 1e-15);
    CHECK(std::abs(id.expr(Complex(-0.2, 0.7)) - 1.0) < 1e-15);

    ParamSet no_lambda;
    CHECK_THROWS_AS(theorem31_expr(kGeometric, no_lambda), Error);
}

TEST_CASE("corollary_expr fixtures")
{
    CHECK(std::abs(corollary_expr(kGeometric, ApplicationKind::Cor33, 1.0).expr(0.5) - 6.0) < 1e-13);
    CHECK(std::abs(corollary_expr(kGeometric, ApplicationKind::Cor32, 1.0).expr(0.5) - 1.5) < 1e-14);
    const auto c31 = corollary_expr(koebe(), ApplicationKind::Cor31, 0.0);
    const auto p = starlike_ratio(koebe());
    CHECK(std::abs(c31.expr(0.3) - p(0.3)) < 1e-14);
    for (auto k : {ApplicationKind::Cor31, ApplicationKind::Cor32, ApplicationKind::Cor33})
        CHECK(std::abs(corollary_expr(kGeometric, k, 0.4).expr(0.0) - 1.0) < 1e-15);
    CHECK_THROWS_AS(corollary_expr(kGeometric, ApplicationKind::Philike, 1.0), Error);
}

TEST_CASE("philike_expr fixtures")
{
    CHECK(std::abs(philike_expr(kGeometric, kZ, 1.0).expr(0.5) - 6.0) < 1e-13);
    CHECK(std::abs(philike_expr(kGeometric, kZ, 0.5).expr(0.5) - 4.0) < 1e-13);
    CHECK(std::abs(philike_expr(kGeometric, kZ, 1.0).ratio(0.5) - 2.0) < 1e-14);
    for (const auto& fx : testing::philike_fixtures()) {
        const auto app = philike_expr(fx.f, fx.phi, fx.alpha);
        CHECK(std::abs(app.expr(0.0) - 1.0) < 1e-15);
        CHECK(std::abs(app.ratio(0.0) - 1.0) < 1e-15);
    }
    CHECK_THROWS_AS(philike_expr(1.0 + kZ, kZ, 1.0), Error);
    try {
        philike_expr(kGeometric, 2.0 * kZ, 1.0);
        FAIL("expected PhiNotNormalized");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PhiNotNormalized);
    }
}

TEST_CASE("philike identity residual")
{
    const SampleGrid grid;
    CHECK(philike_identity_residual(kGeometric, kZ, 1.0, grid) <= 1e-9);
    CHECK(philike_identity_residual(kGeometric, kZ + 0.5 * kZ * kZ, 0.7, grid) <= 1e-9);
    for (const auto& fx : testing::philike_fixtures()) {
        CAPTURE(fx.label);
        CHECK(philike_identity_residual(fx.f, fx.phi, fx.alpha, grid) <= 1e-9);
    }
}

TEST_CASE("Phi(w) = w reduces the Phi-like expression to cor33")
{
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> a(0.0, 1.5);
    const auto fs = testing::normalized_functions();
    for (int t = 0; t < 20; ++t) {
        const auto& f = fs[static_cast<std::size_t>(t) % fs.size()].f;
        const Complex alpha(a(rng), t % 2 ? 0.3 : 0.0);
        const auto lhs = philike_expr(f, kZ, alpha).expr;
        const auto rhs = corollary_expr(f, ApplicationKind::Cor33, alpha).expr;
        for (int i = 0; i < 1000; ++i) {
            const Complex z = testing::random_disk_point(rng, 0.95);
            const Complex v = rhs(z);
            CHECK(std::abs(lhs(z) - v) <= 1e-10 * (1.0 + std::abs(v)));
        }
    }
}

TEST_CASE("theorem31_expr reduces to transform_P of zf'/f")
{
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const auto fs = testing::normalized_functions();
    int checked = 0;
    for (int t = 0; t < 20; ++t) {
        const auto& f = fs[static_cast<std::size_t>(t) % fs.size()].f;
        ParamSet ps;
        ps.alpha = 2.0 * u(rng);
        ps.mu = 0.2 + 0.8 * u(rng);
        ps.lambda = Complex(0.2 + 1.3 * u(rng), t % 3 == 0 ? 0.4 * u(rng) : 0.0);
        ps.beta = 1.0 / *ps.lambda;
        const auto expr = theorem31_expr(f, ps).expr;
        const auto p = starlike_ratio(f);
        const auto P = transform_P(p, ps);
        const auto bracket = transform_bracket(p, ps);
        for (int i = 0; i < 100; ++i) {
            const Complex z = testing::random_disk_point(rng, 0.95);
            if (branch_margin(p(z)) <= 0.1 || branch_margin(bracket(z)) <= 0.1)
                continue;
            const Complex v = P(z);
            CHECK(std::abs(expr(z) - v) <= 1e-10 * (1.0 + std::abs(v)));
            ++checked;
        }
    }
    CHECK(checked > 1000);
}

TEST_CASE("Phi-like hypothesis Re((1 - alpha)/alpha + 2q) > 0 for the Janowski fixture")
{
    const Complex alpha = 1.0;
    const auto q = janowski({0.5, -0.5});
    const auto r = min_real_part((1.0 - alpha) / alpha + 2.0 * q, SampleGrid{}, "philike-hypothesis");
    CHECK(r.passed());
    CHECK(r.min_value == doctest::Approx(2.0 * (1.0 - 0.4995) / (1.0 + 0.4995)).epsilon(1e-9));
}
