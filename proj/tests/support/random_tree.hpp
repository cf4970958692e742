#pragma once

#include "subord/analytic_map.hpp"

#include <random>

namespace subord::testing {

inline Complex random_complex(std::mt19937_64& rng, double scale = 1.0)
{
    std::uniform_real_distribution<double> u(-scale, scale);
    return {u(rng), u(rng)};
}

inline Complex random_disk_point(std::mt19937_64& rng, double max_radius)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double r = max_radius * std::sqrt(u(rng));
    const double t = 2.0 * 3.141592653589793 * u(rng);
    return std::polar(r, t);
}

/// Random expression tree of depth at most `depth` using every node kind.
inline AnalyticMap random_tree(std::mt19937_64& rng, int depth)
{
    std::uniform_int_distribution<int> leaf_pick(0, 2);
    if (depth <= 1)
        return leaf_pick(rng) == 0 ? constant(random_complex(rng)) : z_map();

    std::uniform_int_distribution<int> kind_pick(0, 9);
    switch (kind_pick(rng)) {
    case 0: return random_tree(rng, depth - 1) + random_tree(rng, depth - 1);
    case 1: return random_tree(rng, depth - 1) - random_tree(rng, depth - 1);
    case 2:
    case 3: return random_tree(rng, depth - 1) * random_tree(rng, depth - 1);
    case 4: return random_tree(rng, depth - 1) / (2.0 + random_tree(rng, depth - 1));
    case 5: {
        std::uniform_int_distribution<int> which(0, 2);
        std::uniform_int_distribution<int> n(-2, 3);
        std::uniform_real_distribution<double> x(-1.5, 1.5);
        const int w = which(rng);
        const Complex c = w == 0 ? Complex(n(rng)) : (w == 1 ? Complex(x(rng)) : random_complex(rng));
        return pow(1.5 + random_tree(rng, depth - 1), c);
    }
    case 6: return log(2.0 + random_tree(rng, depth - 1));
    case 7: return exp(random_tree(rng, depth - 1));
    case 8: return compose(random_tree(rng, depth - 1), 0.5 * random_tree(rng, depth - 1));
    default: return random_tree(rng, depth - 1);
    }
}

/// A point where finite differences are trustworthy: the tree evaluates, is
/// moderate in size, and difference quotients at two coarse steps agree.
inline bool well_conditioned(const AnalyticMap& m, Complex z)
{
    try {
        const Complex v = m(z);
        if (std::abs(v) > 100.0)
            return false;
        const Complex d3 = (m(z + 1e-3) - m(z - 1e-3)) / 2e-3;
        const Complex d4 = (m(z + 1e-4) - m(z - 1e-4)) / 2e-4;
        return std::abs(d3 - d4) <= 1e-3 * (1.0 + std::abs(d4)) && std::abs(d4) < 1e4;
    } catch (const Error&) {
        return false;
    }
}

} // namespace subord::testing
