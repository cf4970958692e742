#include "subord/error.hpp"

#include <sstream>

namespace subord {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::BranchCutHit: return "BranchCutHit";
    case ErrorCode::ZeroBase: return "ZeroBase";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::TooCloseToCurve: return "TooCloseToCurve";
    case ErrorCode::AmbiguousWinding: return "AmbiguousWinding";
    case ErrorCode::RefinementLimit: return "RefinementLimit";
    case ErrorCode::CenterMismatch: return "CenterMismatch";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::PhiNotNormalized: return "PhiNotNormalized";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::UnsupportedQ: return "UnsupportedQ";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

namespace {

std::string format_message(ErrorCode code, const std::string& what, const std::optional<Complex>& point)
{
    std::ostringstream os;
    os << to_string(code) << ": " << what;
    if (point) {
        os.precision(17);
        os << " at z=(" << point->real() << ", " << point->imag() << ")";
    }
    return os.str();
}

} // namespace

Error::Error(ErrorCode code, const std::string& what, std::optional<Complex> point)
    : std::runtime_error(format_message(code, what, point)), code_(code), point_(point)
{
}

bool Error::is_evaluation_error() const noexcept
{
    return code_ == ErrorCode::DivisionByZero || code_ == ErrorCode::BranchCutHit ||
           code_ == ErrorCode::ZeroBase || code_ == ErrorCode::NonFinite;
}

Error Error::with_point(Complex z) const
{
    // Strip the prefix that format_message added so the text is not doubled.
    std::string text = what();
    const auto prefix = std::string(to_string(code_)) + ": ";
    if (text.rfind(prefix, 0) == 0)
        text.erase(0, prefix.size());
    return Error(code_, text, z);
}

} // namespace subord
