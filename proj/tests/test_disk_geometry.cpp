#include "doctest.h"

#include "subord/disk_geometry.hpp"
#include "support/random_tree.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace subord;

namespace {

const AnalyticMap kCayley = (1.0 + z_map()) / (1.0 - z_map());

ImageCurve unit_circle(int n)
{
    ImageCurve c;
    c.rho = 1.0;
    for (int k = 0; k < n; ++k) {
        const double t = 2.0 * std::numbers::pi * k / n;
        c.samples.push_back({t, std::polar(1.0, t)});
    }
    c.orientation = 1;
    return c;
}

} // namespace

TEST_CASE("SampleGrid validation")
{
    SampleGrid g;
    CHECK_NOTHROW(g.validate());
    CHECK(g.size() == 4 * 4096);
    g.radii = {0.5, 0.5};
    CHECK_THROWS_AS(g.validate(), Error);
    g.radii = {0.5, 1.0};
    CHECK_THROWS_AS(g.validate(), Error);
    g.radii = {0.5};
    g.angular_count = 32;
    CHECK_THROWS_AS(g.validate(), Error);
}

TEST_CASE("boundary_curve: identity map is the unit circle")
{
    const auto c = boundary_curve(z_map(), 1.0 - 1e-9, 4096);
    CHECK(std::abs(c.diameter() - 2.0) < 1e-6);
    CHECK(c.orientation == 1);
    CHECK(c.max_gap() < 1e-2 * c.diameter());
    CHECK(c.samples.front().theta == 0.0);
}

TEST_CASE("boundary_curve: Cayley image stays in the right half-plane")
{
    const auto c = boundary_curve(kCayley, 0.9, 4096);
    double min_re = 1e300;
    for (const auto& s : c.samples)
        min_re = std::min(min_re, s.w.real());
    CHECK(min_re == doctest::Approx((1.0 - 0.9) / (1.0 + 0.9)).epsilon(1e-9));
    CHECK(c.max_gap() <= 1e-2 * c.diameter());
    for (std::size_t i = 1; i < c.samples.size(); ++i)
        CHECK(c.samples[i].theta > c.samples[i - 1].theta);
}

TEST_CASE("boundary_curve: adaptive refinement resolves an unbounded image")
{
    const auto c = boundary_curve(kCayley, 1.0 - 1e-6, 4096);
    CHECK(c.samples.size() > 4096);
    CHECK(c.max_gap() <= 1e-2 * c.diameter());
    CHECK(c.diameter() > 1e6);
}

TEST_CASE("boundary_curve: pole on the circle propagates the evaluation error")
{
    const auto g = 1.0 / (z_map() - 0.5);
    CHECK_THROWS_AS(boundary_curve(g, 0.5, 64), Error);
    CHECK_THROWS_AS(boundary_curve(z_map(), 1.0, 64), Error);
}

TEST_CASE("boundary_curve: refinement budget")
{
    RefinementOptions tight;
    tight.max_points = 5000;
    CHECK_THROWS_AS(boundary_curve(kCayley, 1.0 - 1e-6, 4096, tight), Error);
}

TEST_CASE("winding_number fixtures")
{
    const auto c = unit_circle(4096);
    CHECK(winding_number(c, 0.0) == 1);
    CHECK(winding_number(c, 2.0) == 0);
    CHECK(winding_number(c, 0.99) == 1);
    CHECK_THROWS_AS(winding_number(c, 1.0), Error);

    auto reversed = c;
    std::reverse(reversed.samples.begin(), reversed.samples.end());
    CHECK(winding_number(reversed, 0.0) == -1);
}

TEST_CASE("winding_number: points far outside the bounding box have winding zero")
{
    std::mt19937_64 rng(9);
    for (int t = 0; t < 20; ++t) {
        const auto g = (1.0 + testing::random_complex(rng) * z_map()) / (1.0 + 0.5 * testing::random_complex(rng) * z_map());
        const auto c = boundary_curve(g, 0.9, 256);
        const Complex far = 10.0 * (1.0 + c.diameter()) * std::polar(1.0, t * 0.7) + c.samples[0].w;
        CHECK(winding_number(c, far) == 0);
    }
}

TEST_CASE("CurveIndex agrees with the angle-sum winding number")
{
    std::mt19937_64 rng(21);
    const std::vector<AnalyticMap> maps{
        kCayley,
        z_map() + 0.3 * z_map() * z_map(),
        exp(z_map()),
        z_map() + 0.9 * z_map() * z_map(),
    };
    for (const auto& g : maps) {
        const auto c = boundary_curve(g, 0.95, 512);
        const CurveIndex idx(c.points());
        for (int i = 0; i < 150; ++i) {
            const Complex w = c.samples[0].w + testing::random_complex(rng, c.diameter());
            if (idx.distance_within(w, 1e-6) < 1e-6)
                continue;
            CHECK(idx.winding(w) == winding_number(c, w));
        }
    }
}

TEST_CASE("CurveIndex distance and self-intersection")
{
    const CurveIndex circle(unit_circle(1024).points());
    CHECK(circle.distance_within(0.0, 2.0) == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(circle.distance_within(0.0, 0.5) == 0.5);
    CHECK(circle.distance_within(Complex(0.0, 3.0), 10.0) == doctest::Approx(2.0).epsilon(1e-4));
    CHECK_FALSE(circle.self_intersects());

    const auto loop = boundary_curve(z_map() + 0.9 * z_map() * z_map(), 0.99, 1024);
    CHECK(CurveIndex(loop.points()).self_intersects());
    const auto ok = boundary_curve(z_map() + 0.4 * z_map() * z_map(), 0.99, 1024);
    CHECK_FALSE(CurveIndex(ok.points()).self_intersects());
}

TEST_CASE("min_real_part fixtures")
{
    const SampleGrid grid;
    const auto one = min_real_part(constant(1.0), grid);
    CHECK(one.min_value == 1.0);
    CHECK(one.passed());

    const auto m = min_real_part((1.0 + 0.5 * z_map()) / (1.0 - 0.5 * z_map()), grid);
    CHECK(m.min_value == doctest::Approx((1.0 - 0.4995) / (1.0 + 0.4995)).epsilon(1e-9));
    CHECK(std::abs(m.argmin - Complex(-0.999)) < 1e-9);
    CHECK(m.passed());
    CHECK(m.min_value == doctest::Approx(0.3338).epsilon(1e-3));

    const auto zr = min_real_part(z_map(), grid, "identity");
    CHECK(zr.name == "identity");
    CHECK(zr.min_value == doctest::Approx(-0.999));
    CHECK_FALSE(zr.passed());

    const auto tiny = min_real_part(constant(5e-5), grid);
    CHECK(tiny.passed());
    CHECK(tiny.soft_flags.size() == 1);

    try {
        min_real_part(1.0 / (z_map() - 0.5), grid);
        FAIL("expected an evaluation error");
    } catch (const Error& e) {
        REQUIRE(e.point());
        CHECK(std::abs(*e.point() - Complex(0.5)) < 1e-12);
    }
}

TEST_CASE("test_subordination fixtures")
{
    const SampleGrid grid;
    CHECK(test_subordination(kCayley, kCayley, grid).outcome == Outcome::Holds);

    const auto janowski = (1.0 + 0.5 * z_map()) / (1.0 - 0.5 * z_map());
    CHECK(test_subordination(janowski, janowski, grid).outcome == Outcome::Holds);

    CHECK(test_subordination(1.0 + z_map(), kCayley, grid).outcome == Outcome::Holds);

    const auto fails = test_subordination(1.0 + 1.9 * z_map(), kCayley, grid);
    CHECK(fails.outcome == Outcome::Fails);
    REQUIRE(fails.witness_z);
    REQUIRE(fails.witness_w);
    CHECK(std::abs(*fails.witness_z - Complex(-0.999)) < 1e-2);
    CHECK(fails.witness_w->real() == doctest::Approx(1.0 - 1.9 * 0.999).epsilon(1e-3));
}

TEST_CASE("test_subordination: center mismatch fails at z = 0")
{
    const auto v = test_subordination(2.0 + 0.1 * z_map(), kCayley, SampleGrid{});
    CHECK(v.outcome == Outcome::Fails);
    REQUIRE(v.witness_z);
    CHECK(*v.witness_z == Complex(0.0));
    CHECK(v.detail.find("CenterMismatch") != std::string::npos);
}

TEST_CASE("test_subordination: non-univalent g is inconclusive")
{
    const auto g = z_map() + 0.9 * z_map() * z_map();
    const auto v = test_subordination(0.5 * z_map(), g, SampleGrid{});
    CHECK(v.outcome == Outcome::Inconclusive);
    CHECK(v.detail.find("univalence") != std::string::npos);
}

TEST_CASE("test_subordination: Fails persists under angular refinement")
{
    SampleGrid coarse;
    coarse.angular_count = 256;
    SampleGrid fine = coarse;
    fine.angular_count = 512;
    const std::vector<AnalyticMap> fs{1.0 + 1.9 * z_map(), 1.0 + 1.2 * z_map() + 0.5 * z_map() * z_map(),
                                      (1.0 + 0.9 * z_map()) / (1.0 - 0.9 * z_map())};
    const auto g = (1.0 + 0.5 * z_map()) / (1.0 - 0.5 * z_map());
    for (const auto& f : fs) {
        const auto a = test_subordination(f, g, coarse);
        const auto b = test_subordination(f, g, fine);
        CHECK(a.outcome == Outcome::Fails);
        CHECK(b.outcome == Outcome::Fails);
    }
}
