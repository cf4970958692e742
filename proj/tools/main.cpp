#include "commands.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

using namespace subord;
using namespace subord::cli;

namespace {

RunConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::Io, "cannot read config " + path);
    try {
        return config_from_json(Json::parse(in));
    } catch (const Json::parse_error& e) {
        throw Error(ErrorCode::ParseError, path + ": " + e.what());
    }
}

ScanAxis parse_axis(const std::string& text)
{
    const auto v = parse_list(text);
    if (v.size() != 3 || v[2] != static_cast<int>(v[2]))
        throw Error(ErrorCode::ParseError, "scan axis must be 'first,last,count': '" + text + "'");
    return {v[0], v[1], static_cast<int>(v[2])};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Numerical checks for first-order differential subordination"};
    app.name("subord-lab");

    std::optional<std::string> command, config_path, family, beta, gamma, delta, lambda, grid_radii, out;
    std::optional<std::string> scan_A, scan_B, scan_delta;
    std::optional<double> A, B, alpha, mu, plot_radius;
    std::optional<int> grid_n;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::map<std::string, std::optional<std::string>> fns{{"f", {}}, {"g", {}}, {"p", {}},
                                                          {"q", {}}, {"q1", {}}, {"q2", {}}};

    std::string commands;
    for (const char* c : kCommands)
        commands += std::string(commands.empty() ? "" : ", ") + c;
    app.add_option("command", command, "One of: " + commands);
    app.add_option("--config", config_path, "JSON config; flags override its entries");
    app.add_option("--family", family, "Family used for q: janowski, cayley, koebe, identity");
    app.add_option("--A", A, "Janowski A");
    app.add_option("--B", B, "Janowski B");
    app.add_option("--alpha", alpha);
    app.add_option("--beta", beta, "Complex as re,im");
    app.add_option("--gamma", gamma, "Complex as re,im");
    app.add_option("--delta", delta, "Complex as re,im");
    app.add_option("--mu", mu);
    app.add_option("--lambda", lambda, "Complex as re,im");
    app.add_option("--grid-radii", grid_radii, "Comma separated radii in (0, 1)");
    app.add_option("--grid-n", grid_n, "Angles per radius");
    app.add_option("--out", out, "Output directory (default .)");
    app.add_option("--seed", seed, "Campaign seed (default 0)");
    app.add_option("--trials", trials, "Campaign size (default 500)");
    for (auto& [role, value] : fns)
        app.add_option("--" + role, value, "Function spec: prefix tree or 'family=NAME A=.. B=..'");
    app.add_option("--scan-A", scan_A, "first,last,count (default 0.1,0.9,9)");
    app.add_option("--scan-B", scan_B, "first,last,count (default -0.9,-0.1,9)");
    app.add_option("--scan-delta", scan_delta, "Comma separated real delta values");
    app.add_option("--plot-radius", plot_radius, "Radius of the plotted image curves (default: last grid radius)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        RunConfig cfg = config_path ? load_config(*config_path) : RunConfig{};
        if (command)
            cfg.command = *command;
        if (cfg.command.empty())
            throw Error(ErrorCode::BadParams, "no command given; expected one of: " + commands);
        if (family)
            cfg.family = *family;
        if (A)
            cfg.ps.A = *A;
        if (B)
            cfg.ps.B = *B;
        if (alpha)
            cfg.ps.alpha = *alpha;
        if (mu)
            cfg.ps.mu = *mu;
        if (beta)
            cfg.ps.beta = parse_complex(*beta);
        if (gamma)
            cfg.ps.gamma = parse_complex(*gamma);
        if (delta)
            cfg.ps.delta = parse_complex(*delta);
        if (lambda)
            cfg.ps.lambda = parse_complex(*lambda);
        if (grid_radii || grid_n) {
            if (!cfg.grid)
                cfg.grid = SampleGrid{};
            if (grid_radii)
                cfg.grid->radii = parse_list(*grid_radii);
            if (grid_n)
                cfg.grid->angular_count = *grid_n;
        }
        if (out)
            cfg.out = *out;
        if (seed)
            cfg.seed = *seed;
        if (trials)
            cfg.trials = *trials;
        for (const auto& [role, value] : fns)
            if (value)
                cfg.functions[role] = *value;
        if (scan_A)
            cfg.scan_A = parse_axis(*scan_A);
        if (scan_B)
            cfg.scan_B = parse_axis(*scan_B);
        if (scan_delta)
            cfg.scan_delta = parse_list(*scan_delta);
        if (plot_radius)
            cfg.plot_radius = *plot_radius;

        const auto result = run(cfg);
        std::cout << result.summary << "\n";
        return result.exit_code;
    } catch (const Error& e) {
        std::cerr << "subord-lab: " << e.what() << "\n";
        return is_usage_error(e) ? kExitUsage : kExitInconclusive;
    }
}
