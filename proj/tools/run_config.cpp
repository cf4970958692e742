#include "run_config.hpp"

#include <algorithm>
#include <charconv>
#include <iterator>
#include <set>

namespace subord::cli {

std::vector<double> ScanAxis::values() const
{
    std::vector<double> v;
    for (int i = 0; i < count; ++i)
        v.push_back(count == 1 ? first : first + (last - first) * i / (count - 1));
    return v;
}

namespace {

const std::set<std::string> kRoles{"f", "g", "p", "q", "q1", "q2"};

double parse_double(std::string_view s)
{
    while (!s.empty() && s.front() == ' ')
        s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ')
        s.remove_suffix(1);
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw Error(ErrorCode::ParseError, "not a number: '" + std::string(s) + "'");
    return x;
}

Complex json_complex(const Json& j)
{
    if (j.is_string())
        return parse_complex(j.get<std::string>());
    return complex_from_json(j);
}

ScanAxis json_axis(const Json& j)
{
    if (!j.is_array() || j.size() != 3)
        throw Error(ErrorCode::ParseError, "scan axis must be [first, last, count]");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<int>()};
}

} // namespace

Complex parse_complex(const std::string& text)
{
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        return {parse_double(text), 0.0};
    if (text.find(',', comma + 1) != std::string::npos)
        throw Error(ErrorCode::ParseError, "complex value must be 're,im': '" + text + "'");
    return {parse_double(std::string_view(text).substr(0, comma)), parse_double(std::string_view(text).substr(comma + 1))};
}

std::vector<double> parse_list(const std::string& text)
{
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = std::min(text.find(',', start), text.size());
        out.push_back(parse_double(std::string_view(text).substr(start, comma - start)));
        start = comma + 1;
    }
    return out;
}

void RunConfig::validate() const
{
    if (std::find(std::begin(kCommands), std::end(kCommands), command) == std::end(kCommands))
        throw Error(ErrorCode::BadParams, "unknown command '" + command + "'");
    for (const auto& [role, spec] : functions)
        if (!kRoles.count(role))
            throw Error(ErrorCode::BadParams, "unknown function role '" + role + "'");
    ps.validate();
    if (grid)
        grid->validate();
    if (scan_A.count < 0 || scan_B.count < 0)
        throw Error(ErrorCode::BadParams, "scan axis count must be non-negative");
    if (plot_radius && !(*plot_radius > 0.0 && *plot_radius < 1.0))
        throw Error(ErrorCode::BadParams, "plot radius must lie in (0, 1)");
}

RunConfig config_from_json(const Json& j)
{
    if (!j.is_object())
        throw Error(ErrorCode::ParseError, "config must be a JSON object");
    RunConfig cfg;
    std::optional<std::vector<double>> radii;
    std::optional<int> angular;
    try {
        for (const auto& [key, v] : j.items()) {
            if (key == "command")
                cfg.command = v.get<std::string>();
            else if (key == "family")
                cfg.family = v.get<std::string>();
            else if (key == "A")
                cfg.ps.A = v.get<double>();
            else if (key == "B")
                cfg.ps.B = v.get<double>();
            else if (key == "alpha")
                cfg.ps.alpha = v.get<double>();
            else if (key == "mu")
                cfg.ps.mu = v.get<double>();
            else if (key == "beta")
                cfg.ps.beta = json_complex(v);
            else if (key == "gamma")
                cfg.ps.gamma = json_complex(v);
            else if (key == "delta")
                cfg.ps.delta = json_complex(v);
            else if (key == "lambda")
                cfg.ps.lambda = json_complex(v);
            else if (key == "grid_radii")
                radii = v.get<std::vector<double>>();
            else if (key == "grid_n")
                angular = v.get<int>();
            else if (key == "out")
                cfg.out = v.get<std::string>();
            else if (key == "seed")
                cfg.seed = v.get<std::uint64_t>();
            else if (key == "trials")
                cfg.trials = v.get<std::size_t>();
            else if (key == "functions")
                for (const auto& [role, spec] : v.items())
                    cfg.functions[role] = spec.get<std::string>();
            else if (kRoles.count(key))
                cfg.functions[key] = v.get<std::string>();
            else if (key == "scan_A")
                cfg.scan_A = json_axis(v);
            else if (key == "scan_B")
                cfg.scan_B = json_axis(v);
            else if (key == "scan_delta")
                cfg.scan_delta = v.get<std::vector<double>>();
            else if (key == "plot_radius")
                cfg.plot_radius = v.get<double>();
            else
                throw Error(ErrorCode::ParseError, "unknown config key '" + key + "'");
        }
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("config: ") + e.what());
    }
    if (radii || angular) {
        cfg.grid = SampleGrid{};
        if (radii)
            cfg.grid->radii = *radii;
        if (angular)
            cfg.grid->angular_count = *angular;
    }
    return cfg;
}

Json config_json(const RunConfig& cfg)
{
    Json j{{"command", cfg.command}};
    Json fns = Json::object();
    for (const auto& [role, spec] : cfg.functions)
        fns[role] = spec;
    j["functions"] = fns;
    j["family"] = cfg.family ? Json(*cfg.family) : Json(nullptr);
    j["params"] = cfg.ps;
    j["grid"] = cfg.grid ? Json(*cfg.grid) : Json(nullptr);
    j["seed"] = cfg.seed;
    if (cfg.command == "falsify")
        j["trials"] = cfg.trials;
    if (cfg.command == "scan") {
        j["scan_A"] = {cfg.scan_A.first, cfg.scan_A.last, cfg.scan_A.count};
        j["scan_B"] = {cfg.scan_B.first, cfg.scan_B.last, cfg.scan_B.count};
        j["scan_delta"] = cfg.scan_delta;
    }
    if (cfg.plot_radius)
        j["plot_radius"] = *cfg.plot_radius;
    return j;
}

} // namespace subord::cli
