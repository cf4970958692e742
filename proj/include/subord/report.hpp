#pragma once

// JSON views of the result types. Field names are part of the stable report
// schema documented in the README.

#include "subord/applications.hpp"
#include "subord/condition.hpp"
#include "subord/disk_geometry.hpp"
#include "subord/params.hpp"
#include "subord/theorem.hpp"

#include "json.hpp"

namespace subord {

using Json = nlohmann::ordered_json;

/// {"re": x, "im": y}
Json complex_json(Complex c);
/// Accepts {"re": x, "im": y}, [x, y] or a bare number.
Complex complex_from_json(const Json& j);

void to_json(Json& j, const ConditionReport& r);
void to_json(Json& j, const SubordinationVerdict& v);
void to_json(Json& j, const ParamSet& ps);
void to_json(Json& j, const SampleGrid& g);

/// premise, hypotheses[], conclusion, consistent, witnesses, grid, params plus
/// theorem, inconclusive, assumptions and flags.
Json theorem_report(const TheoremVerdict& v, const ParamSet& ps, const SampleGrid& grid);

} // namespace subord
