#include "subord/report.hpp"

#include <cmath>

namespace subord {

Json complex_json(Complex c) { return Json{{"re", c.real()}, {"im", c.imag()}}; }

Complex complex_from_json(const Json& j)
{
    if (j.is_number())
        return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2)
        return {j[0].get<double>(), j[1].get<double>()};
    if (j.is_object() && j.contains("re"))
        return {j.at("re").get<double>(), j.value("im", 0.0)};
    throw Error(ErrorCode::ParseError, "expected a complex number as {re, im}, [re, im] or a number");
}

namespace {

// Non-finite doubles have no JSON representation; they are written as null.
Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json optional_complex(const std::optional<Complex>& c) { return c ? complex_json(*c) : Json(nullptr); }

} // namespace

void to_json(Json& j, const ConditionReport& r)
{
    j = Json{{"name", r.name},
             {"min_value", number(r.min_value)},
             {"argmin", complex_json(r.argmin)},
             {"verdict", r.passed() ? "pass" : "fail"},
             {"soft_flags", r.soft_flags}};
}

void to_json(Json& j, const SubordinationVerdict& v)
{
    j = Json{{"outcome", to_string(v.outcome)},
             {"witness_z", optional_complex(v.witness_z)},
             {"witness_w", optional_complex(v.witness_w)},
             {"detail", v.detail}};
}

void to_json(Json& j, const ParamSet& ps)
{
    j = Json{{"alpha", ps.alpha},
             {"mu", ps.mu},
             {"beta", complex_json(ps.beta)},
             {"gamma", complex_json(ps.gamma)},
             {"delta", complex_json(ps.delta)}};
    if (ps.lambda)
        j["lambda"] = complex_json(*ps.lambda);
    if (ps.A)
        j["A"] = *ps.A;
    if (ps.B)
        j["B"] = *ps.B;
}

void to_json(Json& j, const SampleGrid& g) { j = Json{{"radii", g.radii}, {"angular_count", g.angular_count}}; }

Json theorem_report(const TheoremVerdict& v, const ParamSet& ps, const SampleGrid& grid)
{
    Json witnesses = Json::object();
    if (v.premise.witness_z)
        witnesses["premise"] = {{"z", complex_json(*v.premise.witness_z)},
                                {"w", optional_complex(v.premise.witness_w)}};
    if (v.conclusion.witness_z)
        witnesses["conclusion"] = {{"z", complex_json(*v.conclusion.witness_z)},
                                   {"w", optional_complex(v.conclusion.witness_w)}};
    for (const auto& h : v.hypotheses)
        if (!h.passed())
            witnesses[h.name] = {{"z", complex_json(h.argmin)}, {"min_value", number(h.min_value)}};

    return Json{{"theorem", v.theorem},
                {"premise", v.premise},
                {"hypotheses", v.hypotheses},
                {"conclusion", v.conclusion},
                {"consistent", v.consistent},
                {"inconclusive", v.inconclusive},
                {"witnesses", witnesses},
                {"assumptions", v.assumptions},
                {"flags", v.flags},
                {"grid", grid},
                {"params", ps}};
}

} // namespace subord
