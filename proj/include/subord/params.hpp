#pragma once

#include "subord/error.hpp"

#include <optional>

namespace subord {

/// Parameters of the class R(alpha, beta, gamma, delta, mu), with the optional
/// lambda of the starlike application and Janowski (A, B).
struct ParamSet {
    double alpha = 1.0;
    double mu = 1.0;
    Complex beta = 1.0;
    Complex gamma = 0.0;
    Complex delta = 0.0;
    std::optional<Complex> lambda;
    std::optional<double> A;
    std::optional<double> B;

    /// Throws BadParams unless 0 < mu <= 1, alpha + mu >= 0, beta != 0, all
    /// values finite, lambda != 0 when present and -1 < B < A <= 1 when both
    /// are present.
    void validate() const;

    double ratio() const noexcept { return alpha / mu; }
};

} // namespace subord
