#pragma once

#include "subord/analytic_map.hpp"

#include <complex>
#include <string>
#include <vector>

namespace subord::testing {

struct MobiusPair {
    std::string label;
    AnalyticMap f;
    AnalyticMap g;
};

/// Fifty (f, g) pairs of Moebius maps normalized to 1 at the origin: five
/// dominating maps, each against dilations, rotations and rescaled images.
inline std::vector<MobiusPair> mobius_suite()
{
    const auto z = z_map();
    auto mob = [&](Complex a, Complex b) { return (1.0 + a * z) / (1.0 + b * z); };
    const std::vector<std::pair<std::string, AnalyticMap>> gs{
        {"J(0.5,-0.5)", mob(0.5, -0.5)},
        {"J(0.8,-0.2)", mob(0.8, -0.2)},
        {"J(0.3,0)", mob(0.3, 0.0)},
        {"cayley", mob(1.0, -1.0)},
        {"rotated", mob(Complex(0.4, 0.4), Complex(-0.3, 0.2))},
    };
    const Complex tilt = std::polar(1.0, 0.5);
    std::vector<MobiusPair> out;
    for (const auto& [name, g] : gs) {
        auto dil = [&](Complex s) { return compose(g, s * z); };
        out.push_back({name + " vs itself", g, g});
        out.push_back({name + " dilated 0.3", dil(0.3), g});
        out.push_back({name + " dilated 0.7", dil(0.7), g});
        out.push_back({name + " dilated 0.95", dil(0.95), g});
        out.push_back({name + " rotated dilation", dil(std::polar(0.6, 1.0)), g});
        out.push_back({name + " scaled 1.5", 1.0 + 1.5 * (dil(0.9) - 1.0), g});
        out.push_back({name + " scaled 2", 1.0 + 2.0 * (g - 1.0), g});
        out.push_back({name + " tilted", 1.0 + tilt * (dil(0.8) - 1.0), g});
        out.push_back({name + " shrunk 0.5", 1.0 + 0.5 * (g - 1.0), g});
        out.push_back({name + " reflected", 1.0 - (dil(0.9) - 1.0), g});
    }
    return out;
}

} // namespace subord::testing
