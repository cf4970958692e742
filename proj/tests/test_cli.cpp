#include "doctest.h"

#include "artifacts.hpp"
#include "commands.hpp"
#include "run_config.hpp"

#include "subord/families.hpp"

#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

using namespace subord;
using namespace subord::cli;

namespace {

std::filesystem::path scratch(const std::string& name)
{
    const auto dir = std::filesystem::temp_directory_path() / "subord_cli_tests" / name;
    std::filesystem::remove_all(dir);
    return dir;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

LabeledCurve circle(double radius, int n, std::string label)
{
    LabeledCurve c{std::move(label), {}};
    c.curve.rho = radius;
    for (int k = 0; k < n; ++k) {
        const double t = 2.0 * std::numbers::pi * k / n;
        c.curve.samples.push_back({t, std::polar(radius, t)});
    }
    return c;
}

std::vector<double> view_box(const std::string& svg)
{
    const auto at = svg.find("viewBox=\"") + 9;
    std::istringstream in(svg.substr(at, svg.find('"', at) - at));
    std::vector<double> v;
    for (double x; in >> x;)
        v.push_back(x);
    return v;
}

} // namespace

TEST_CASE("csv_field quoting")
{
    CHECK(csv_field("0.5") == "0.5");
    CHECK(csv_field("") == "");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_field("two\nlines") == "\"two\nlines\"");
}

TEST_CASE("format_number round-trips and avoids negative zero")
{
    CHECK(format_number(0.5) == "0.5");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(std::nan("")).empty());
    const double x = 0.1 + 0.2;
    CHECK(std::stod(format_number(x)) == x);
}

TEST_CASE("scan_csv: header-only for an empty sweep")
{
    const auto text = scan_csv({});
    CHECK(text == std::string(kScanHeader) + "\r\n");
}

TEST_CASE("scan_csv: missing values are empty fields")
{
    ScanRow r;
    r.A = 0.5;
    r.B = -0.5;
    r.cond22_min = 0.25;
    r.closed_form_1 = true;
    const auto text = scan_csv({r});
    const auto line = text.substr(text.find("\r\n") + 2);
    CHECK(line == "0.5,-0.5,1,1,0,0,0,0,0,1,0.25,,,true,\r\n");
}

TEST_CASE("render_svg: unit circle viewBox has 1% padding")
{
    const auto svg = render_svg({circle(1.0, 4096, "unit <circle>")});
    const auto vb = view_box(svg);
    REQUIRE(vb.size() == 4);
    CHECK(vb[0] == doctest::Approx(-1.02).epsilon(1e-6));
    CHECK(vb[1] == doctest::Approx(-1.02).epsilon(1e-6));
    CHECK(vb[2] == doctest::Approx(2.04).epsilon(1e-6));
    CHECK(vb[3] == doctest::Approx(2.04).epsilon(1e-6));
    CHECK(svg.find("<polyline") != std::string::npos);
    CHECK(svg.find("<polyline", svg.find("<polyline") + 1) == std::string::npos);
    CHECK(svg.find("unit &lt;circle&gt;") != std::string::npos);
}

TEST_CASE("render_svg: y axis points up")
{
    LabeledCurve c{"upper", {}};
    c.curve.samples = {{0.0, {0.0, 1.0}}, {1.0, {1.0, 2.0}}, {2.0, {2.0, 1.5}}};
    const auto svg = render_svg({c});
    CHECK(svg.find("0,-1 1,-2 2,-1.5 0,-1") != std::string::npos);
    CHECK(view_box(svg)[1] == doctest::Approx(-2.02));
}

TEST_CASE("render_svg: empty input is a usage error")
{
    CHECK_THROWS_AS(render_svg({}), Error);
    CHECK_THROWS_AS(render_svg({LabeledCurve{"empty", {}}}), Error);
}

TEST_CASE("parse_complex and parse_list")
{
    CHECK(parse_complex("1.5") == Complex(1.5, 0.0));
    CHECK(parse_complex("0.5,-2") == Complex(0.5, -2.0));
    CHECK_THROWS_AS(parse_complex("1,2,3"), Error);
    CHECK_THROWS_AS(parse_complex("x"), Error);
    CHECK(parse_list("0.5,0.9, 0.99") == std::vector<double>{0.5, 0.9, 0.99});
    CHECK_THROWS_AS(parse_list("0.5,,0.9"), Error);
}

TEST_CASE("parse_function_spec: families and trees")
{
    const auto q = parse_function_spec("family=janowski A=0.5 B=-0.5");
    CHECK(std::abs(q(0.5) - janowski({0.5, -0.5})(0.5)) == 0.0);
    CHECK(std::abs(parse_function_spec("family=cayley")(0.5) - 3.0) < 1e-15);
    CHECK(std::abs(parse_function_spec("family=identity")(0.25) - 0.25) < 1e-15);
    CHECK(std::abs(parse_function_spec("+ 1 * 1.9 z")(-0.5) - 0.05) < 1e-15);
    CHECK_THROWS_AS(parse_function_spec("family=janowski A=0.5"), Error);
    CHECK_THROWS_AS(parse_function_spec("family=janowski A=0.5 B=0.7"), Error);
    CHECK_THROWS_AS(parse_function_spec("family=nope"), Error);
    CHECK_THROWS_AS(parse_function_spec("family=cayley C=1"), Error);
}

TEST_CASE("config_from_json")
{
    const auto cfg = config_from_json(Json::parse(R"({
        "command": "check-hypotheses", "family": "janowski", "A": 0.5, "B": -0.5,
        "beta": "1,0.5", "delta": [2, 0], "grid_n": 256, "seed": 9,
        "functions": {"p": "z"}, "q1": "family=cayley"
    })"));
    CHECK(cfg.command == "check-hypotheses");
    CHECK(cfg.ps.beta == Complex(1.0, 0.5));
    CHECK(cfg.ps.delta == Complex(2.0, 0.0));
    REQUIRE(cfg.grid);
    CHECK(cfg.grid->angular_count == 256);
    CHECK(cfg.grid->radii == SampleGrid{}.radii);
    CHECK(cfg.seed == 9);
    CHECK(cfg.functions.at("p") == "z");
    CHECK(cfg.functions.at("q1") == "family=cayley");
    CHECK_THROWS_AS(config_from_json(Json::parse(R"({"comand": "scan"})")), Error);
    CHECK_THROWS_AS(config_from_json(Json::parse(R"({"alpha": "one"})")), Error);
}

TEST_CASE("RunConfig validation")
{
    RunConfig cfg;
    cfg.command = "scan";
    CHECK_NOTHROW(cfg.validate());
    cfg.command = "frobnicate";
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg.command = "scan";
    cfg.functions["h"] = "z";
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg.functions.clear();
    cfg.ps.mu = 2.0;
    CHECK_THROWS_AS(cfg.validate(), Error);
}

TEST_CASE("run: scan writes one row per sweep point")
{
    RunConfig cfg;
    cfg.command = "scan";
    cfg.out = scratch("scan");
    cfg.grid = SampleGrid{{0.5, 0.9, 0.99, 0.999}, 256};
    cfg.scan_A = {0.3, 0.5, 3};
    cfg.scan_B = {-0.5, -0.1, 2};
    cfg.scan_delta = {0.0, 2.0};
    const auto r = run(cfg);
    CHECK(r.exit_code == kExitPass);
    const auto csv = slurp(cfg.out / "scan.csv");
    std::size_t lines = 0;
    for (std::size_t at = 0; (at = csv.find("\r\n", at)) != std::string::npos; at += 2)
        ++lines;
    CHECK(lines == 1 + 12);
    CHECK(r.report["result"]["rows"] == 12);
    CHECK(std::filesystem::exists(cfg.out / "report.json"));
}

TEST_CASE("run: exit codes follow the verdicts")
{
    RunConfig base;
    base.grid = SampleGrid{{0.5, 0.9, 0.99, 0.999}, 1024};

    auto exit_of = [&](RunConfig cfg, const std::string& name) {
        cfg.out = scratch(name);
        return run(cfg).exit_code;
    };

    RunConfig holds = base;
    holds.command = "test-subordination";
    holds.functions = {{"f", "+ 1 z"}, {"g", "family=cayley"}};
    CHECK(exit_of(holds, "holds") == kExitPass);

    RunConfig fails = holds;
    fails.functions["f"] = "+ 1 * 1.9 z";
    CHECK(exit_of(fails, "fails") == kExitFail);

    RunConfig unsure = holds;
    unsure.functions = {{"f", "* 0.5 z"}, {"g", "+ z * 0.9 * z z"}};
    CHECK(exit_of(unsure, "unsure") == kExitInconclusive);

    RunConfig hyp = base;
    hyp.command = "check-hypotheses";
    hyp.family = "janowski";
    hyp.ps.A = 0.5;
    hyp.ps.B = -0.5;
    CHECK(exit_of(hyp, "hyp") == kExitPass);

    RunConfig cls = base;
    cls.command = "check-class";
    cls.functions = {{"p", "- 1 * 2 z"}};
    CHECK(exit_of(cls, "class-fail") == kExitFail);
    cls.functions = {{"p", "family=janowski A=0.5 B=-0.5"}};
    CHECK(exit_of(cls, "class-pass") == kExitPass);

    RunConfig missing = base;
    missing.command = "verify-dominant";
    missing.out = scratch("missing");
    CHECK_THROWS_AS(run(missing), Error);
}
