#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace subord {

using Complex = std::complex<double>;

enum class ErrorCode {
    DivisionByZero,
    BranchCutHit,
    ZeroBase,
    NonFinite,
    TooCloseToCurve,
    AmbiguousWinding,
    RefinementLimit,
    CenterMismatch,
    NotNormalized,
    PhiNotNormalized,
    BadParams,
    DegenerateDenominator,
    UnsupportedQ,
    ParseError,
    Io,
};

std::string_view to_string(ErrorCode code);

/// All library failures are reported through this type. Evaluation errors
/// carry the disk point at which they were raised when one is known.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what, std::optional<Complex> point = std::nullopt);

    ErrorCode code() const noexcept { return code_; }
    const std::optional<Complex>& point() const noexcept { return point_; }

    /// True for the errors an expression tree can raise while being evaluated.
    bool is_evaluation_error() const noexcept;

    Error with_point(Complex z) const;

private:
    ErrorCode code_;
    std::optional<Complex> point_;
};

} // namespace subord
