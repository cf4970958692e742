#include "subord/params.hpp"

#include <cmath>

namespace subord {

namespace {

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

} // namespace

void ParamSet::validate() const
{
    if (!std::isfinite(alpha) || !std::isfinite(mu) || !finite(beta) || !finite(gamma) || !finite(delta))
        throw Error(ErrorCode::BadParams, "parameters must be finite");
    if (!(mu > 0.0 && mu <= 1.0))
        throw Error(ErrorCode::BadParams, "mu must lie in (0, 1]");
    if (alpha + mu < 0.0)
        throw Error(ErrorCode::BadParams, "alpha + mu must be non-negative");
    if (beta == Complex(0.0))
        throw Error(ErrorCode::BadParams, "beta must be non-zero");
    if (lambda && (!finite(*lambda) || *lambda == Complex(0.0)))
        throw Error(ErrorCode::BadParams, "lambda must be finite and non-zero");
    if (A.has_value() != B.has_value())
        throw Error(ErrorCode::BadParams, "A and B must be given together");
    if (A && !(-1.0 < *B && *B < *A && *A <= 1.0))
        throw Error(ErrorCode::BadParams, "Janowski parameters need -1 < B < A <= 1");
}

} // namespace subord
