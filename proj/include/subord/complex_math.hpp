#pragma once

#include "subord/error.hpp"

namespace subord {

/// Margin below which a principal power or logarithm refuses a base near the cut.
inline constexpr double kHardCutMargin = 1e-12;
/// Margins below this are reported as soft flags by the membership checks.
inline constexpr double kSoftCutMargin = 1e-3;

/// Principal argument in (-pi, pi]. Points on the negative real axis get +pi
/// regardless of the sign of their zero imaginary part.
double principal_arg(Complex w);

/// Euclidean distance from w to the ray (-inf, 0].
double branch_margin(Complex w);

/// A real exponent within 1e-12 of an integer. The power is then entire in
/// the base and no cut applies.
bool is_integral_exponent(Complex c);

/// exp(c * (ln|w| + i Arg w)).
///
/// Integral exponents are computed by repeated squaring and accept any base
/// (zero only for non-negative exponents). Otherwise the base must be nonzero
/// and, when `cut_margin` > 0, farther than `cut_margin` from the cut; bases on
/// the cut itself are valid for `cut_margin` == 0 and use Arg = pi.
Complex pow_principal(Complex w, Complex c, double cut_margin = 0.0);

/// ln|w| + i Arg w with the same cut policy as pow_principal.
Complex log_principal(Complex w, double cut_margin = 0.0);

} // namespace subord
