#include "commands.hpp"

#include "artifacts.hpp"

#include "subord/campaign.hpp"
#include "subord/families.hpp"
#include "subord/theorem.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

namespace subord::cli {

namespace {

double key_number(const std::map<std::string, std::string>& kv, const std::string& key)
{
    const auto it = kv.find(key);
    if (it == kv.end())
        throw Error(ErrorCode::BadParams, "family spec is missing " + key);
    return parse_complex(it->second).real();
}

AnalyticMap family_map(const std::string& name, const std::map<std::string, std::string>& kv)
{
    if (name == "janowski") {
        const JanowskiParams jp{key_number(kv, "A"), key_number(kv, "B")};
        jp.validate();
        return janowski(jp);
    }
    if (name == "cayley")
        return cayley();
    if (name == "koebe")
        return koebe();
    if (name == "identity")
        return z_map();
    throw Error(ErrorCode::BadParams, "unknown family '" + name + "'");
}

std::string timestamp_now()
{
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

Json error_json(const Error& e)
{
    Json j{{"code", to_string(e.code())}, {"message", e.what()}};
    j["point"] = e.point() ? complex_json(*e.point()) : Json(nullptr);
    return j;
}

class Runner {
public:
    explicit Runner(const RunConfig& cfg) : cfg_(cfg) {}

    AnalyticMap function(const std::string& role) const
    {
        if (const auto it = cfg_.functions.find(role); it != cfg_.functions.end())
            return parse_function_spec(it->second);
        if (role == "q" && cfg_.family)
            return family_map(*cfg_.family, family_keys());
        throw Error(ErrorCode::BadParams, "command " + cfg_.command + " needs --" + role +
                                              (role == "q" ? " or --family" : ""));
    }

    SampleGrid grid() const { return cfg_.grid.value_or(SampleGrid{}); }

    RunResult dispatch()
    {
        const auto& c = cfg_.command;
        if (c == "check-class")
            return check_class();
        if (c == "check-hypotheses")
            return check_hypotheses_cmd();
        if (c == "test-subordination")
            return test_subordination_cmd();
        if (c == "verify-dominant" || c == "verify-subordinant" || c == "verify-sandwich")
            return verify();
        if (c == "scan")
            return scan();
        if (c == "falsify")
            return falsify();
        return plot();
    }

private:
    std::map<std::string, std::string> family_keys() const
    {
        std::map<std::string, std::string> kv;
        if (cfg_.ps.A)
            kv["A"] = format_number(*cfg_.ps.A);
        if (cfg_.ps.B)
            kv["B"] = format_number(*cfg_.ps.B);
        return kv;
    }

    RunResult check_class()
    {
        const auto p = cfg_.functions.count("p") ? function("p") : function("q");
        const auto g = grid();
        RunResult r;
        try {
            const auto rep = class_membership(p, cfg_.ps, g);
            r.report = {{"condition", rep}, {"grid", membership_grid(g)}};
            r.exit_code = rep.passed() ? kExitPass : kExitFail;
            r.summary = "class membership " + std::string(rep.passed() ? "passes" : "fails") +
                        ", min margin " + format_number(rep.min_value);
        } catch (const Error& e) {
            if (is_usage_error(e))
                throw;
            r.report = {{"error", error_json(e)}};
            r.exit_code = kExitFail;
            r.summary = std::string("class membership fails: ") + e.what();
        }
        return r;
    }

    RunResult check_hypotheses_cmd()
    {
        const auto q = function("q");
        const auto g = grid();
        RunResult r;
        try {
            const auto reps = check_hypotheses(q, cfg_.ps, g);
            bool all = true;
            std::string mins;
            for (const auto& h : reps) {
                all = all && h.passed();
                mins += " " + h.name + "=" + format_number(h.min_value);
            }
            r.report = {{"hypotheses", reps}, {"all_pass", all}};
            r.exit_code = all ? kExitPass : kExitFail;
            r.summary = std::string("hypotheses ") + (all ? "pass" : "fail") + ":" + mins;
        } catch (const Error& e) {
            if (is_usage_error(e))
                throw;
            r.report = {{"error", error_json(e)}, {"all_pass", false}};
            r.exit_code = kExitFail;
            r.summary = std::string("hypotheses fail: ") + e.what();
        }
        return r;
    }

    RunResult test_subordination_cmd()
    {
        const auto v = test_subordination(function("f"), function("g"), grid());
        RunResult r;
        r.report = {{"verdict", v}};
        r.exit_code = v.outcome == Outcome::Holds ? kExitPass
                      : v.outcome == Outcome::Fails ? kExitFail
                                                    : kExitInconclusive;
        r.summary = "f < g: " + std::string(to_string(v.outcome));
        return r;
    }

    RunResult verify()
    {
        const auto g = grid();
        TheoremVerdict v;
        if (cfg_.command == "verify-dominant")
            v = verify_dominant(function("p"), function("q"), cfg_.ps, g);
        else if (cfg_.command == "verify-subordinant")
            v = verify_subordinant(function("p"), function("q"), cfg_.ps, g);
        else
            v = verify_sandwich(function("p"), function("q1"), function("q2"), cfg_.ps, g);
        RunResult r;
        r.report = theorem_report(v, cfg_.ps, g);
        r.exit_code = !v.consistent ? kExitFail : v.inconclusive ? kExitInconclusive : kExitPass;
        r.summary = v.theorem + ": premise " + std::string(to_string(v.premise.outcome)) + ", conclusion " +
                    std::string(to_string(v.conclusion.outcome)) + (v.consistent ? ", consistent" : ", INCONSISTENT");
        return r;
    }

    RunResult scan()
    {
        const auto g = grid();
        std::vector<double> deltas = cfg_.scan_delta;
        std::vector<Complex> delta_values;
        if (deltas.empty())
            delta_values.push_back(cfg_.ps.delta);
        for (double d : deltas)
            delta_values.emplace_back(d, 0.0);

        std::vector<ScanRow> rows;
        Json points = Json::array();
        for (const Complex delta : delta_values) {
            for (double A : cfg_.scan_A.values()) {
                for (double B : cfg_.scan_B.values()) {
                    ParamSet ps = cfg_.ps;
                    ps.delta = delta;
                    ps.A = A;
                    ps.B = B;
                    ScanRow row{A, B, ps.alpha, ps.beta, ps.gamma, delta, ps.mu, {}, {}, {}, {}, {}};
                    Json point{{"A", A}, {"B", B}, {"delta", complex_json(delta)}};
                    const JanowskiParams jp{A, B};
                    try {
                        jp.validate();
                        const auto reps = check_hypotheses(janowski(jp), ps, g);
                        row.cond22_min = reps.at(0).min_value;
                        row.cond23_min = reps.at(1).min_value;
                        row.qstar_min = reps.at(2).min_value;
                        point["hypotheses"] = reps;
                    } catch (const Error& e) {
                        point["error"] = error_json(e);
                    }
                    try {
                        const auto cf = example21_membership(jp, ps);
                        row.closed_form_1 = cf.first;
                        row.closed_form_2 = cf.second;
                        point["closed_form"] = {cf.first, cf.second};
                    } catch (const Error& e) {
                        point["closed_form"] = nullptr;
                    }
                    rows.push_back(row);
                    points.push_back(point);
                }
            }
        }
        write_file(cfg_.out / "scan.csv", scan_csv(rows));
        RunResult r;
        r.report = {{"csv", "scan.csv"}, {"rows", rows.size()}, {"points", points}};
        r.summary = std::to_string(rows.size()) + " sweep rows written to scan.csv";
        return r;
    }

    RunResult falsify()
    {
        CampaignConfig cc;
        cc.trials = cfg_.trials;
        cc.seed = cfg_.seed;
        if (cfg_.grid)
            cc.grid = *cfg_.grid;
        const auto res = run_campaign(cc);
        RunResult r;
        r.report = campaign_report(res);
        const auto bad = res.inconsistent();
        const auto unsure = res.inconclusive();
        r.exit_code = bad > 0 ? kExitFail : 2 * unsure > res.records.size() ? kExitInconclusive : kExitPass;
        r.summary = std::to_string(res.records.size()) + " instances, " + std::to_string(bad) + " inconsistent, " +
                    std::to_string(unsure) + " inconclusive";
        return r;
    }

    RunResult plot()
    {
        const auto g = grid();
        const double rho = cfg_.plot_radius.value_or(g.radii.back());
        std::vector<LabeledCurve> curves;
        for (const char* role : {"f", "g", "p", "q", "q1", "q2"}) {
            const auto it = cfg_.functions.find(role);
            if (it != cfg_.functions.end())
                curves.push_back({std::string(role) + ": " + it->second,
                                  boundary_curve(parse_function_spec(it->second), rho, g.angular_count)});
            else if (std::string(role) == "q" && cfg_.family)
                curves.push_back({"q: family=" + *cfg_.family, boundary_curve(function("q"), rho, g.angular_count)});
        }
        if (curves.empty())
            throw Error(ErrorCode::BadParams, "plot needs at least one function (--f, --g, --p, --q, --q1, --q2 or --family)");
        write_file(cfg_.out / "plot.svg", render_svg(curves));
        write_file(cfg_.out / "curves.csv", curves_csv(curves));
        RunResult r;
        Json list = Json::array();
        for (const auto& c : curves)
            list.push_back({{"label", c.label}, {"rho", c.curve.rho}, {"samples", c.curve.samples.size()}});
        r.report = {{"svg", "plot.svg"}, {"csv", "curves.csv"}, {"curves", list}};
        r.summary = std::to_string(curves.size()) + " curves written to plot.svg";
        return r;
    }

    const RunConfig& cfg_;
};

} // namespace

AnalyticMap parse_function_spec(const std::string& spec)
{
    if (spec.rfind("family=", 0) != 0)
        return parse_map(spec);
    std::istringstream in(spec);
    std::string token;
    std::string name;
    std::map<std::string, std::string> kv;
    while (in >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos || eq == 0)
            throw Error(ErrorCode::ParseError, "expected key=value in family spec, got '" + token + "'");
        const auto key = token.substr(0, eq);
        if (key == "family")
            name = token.substr(eq + 1);
        else if (key == "A" || key == "B")
            kv[key] = token.substr(eq + 1);
        else
            throw Error(ErrorCode::ParseError, "unknown family parameter '" + key + "'");
    }
    return family_map(name, kv);
}

bool is_usage_error(const Error& e)
{
    switch (e.code()) {
    case ErrorCode::BadParams:
    case ErrorCode::ParseError:
    case ErrorCode::Io:
    case ErrorCode::UnsupportedQ:
    case ErrorCode::NotNormalized:
    case ErrorCode::PhiNotNormalized:
    case ErrorCode::DegenerateDenominator:
        return true;
    default:
        return false;
    }
}

RunResult run(const RunConfig& cfg)
{
    cfg.validate();
    std::error_code ec;
    std::filesystem::create_directories(cfg.out, ec);
    if (ec)
        throw Error(ErrorCode::Io, "cannot create output directory " + cfg.out.string() + ": " + ec.message());

    Runner runner(cfg);
    RunResult inner;
    try {
        inner = runner.dispatch();
    } catch (const Error& e) {
        if (is_usage_error(e))
            throw;
        // Numerical trouble the harnesses do not absorb leaves the question open.
        inner.report = {{"error", error_json(e)}};
        inner.exit_code = kExitInconclusive;
        inner.summary = std::string("could not decide: ") + e.what();
    }

    RunResult r;
    r.exit_code = inner.exit_code;
    r.summary = cfg.command + ": " + inner.summary;
    r.report = {{"tool", "subord-lab"},
                {"command", cfg.command},
                {"timestamp", timestamp_now()},
                {"exit_code", inner.exit_code},
                {"config", config_json(cfg)},
                {"result", inner.report}};
    write_file(cfg.out / "report.json", r.report.dump(2) + "\n");
    return r;
}

} // namespace subord::cli
