#include "subord/complex_math.hpp"

#include <cmath>
#include <numbers>

namespace subord {

double principal_arg(Complex w)
{
    if (w.imag() == 0.0 && w.real() < 0.0)
        return std::numbers::pi;
    return std::atan2(w.imag(), w.real());
}

double branch_margin(Complex w)
{
    if (w.real() >= 0.0)
        return std::abs(w);
    return std::abs(w.imag());
}

bool is_integral_exponent(Complex c)
{
    return c.imag() == 0.0 && std::abs(c.real()) < 1e9 &&
           std::abs(c.real() - std::round(c.real())) < 1e-12;
}

namespace {

Complex integer_power(Complex w, long long n)
{
    if (n == 0)
        return {1.0, 0.0};
    const bool invert = n < 0;
    unsigned long long k = invert ? static_cast<unsigned long long>(-n) : static_cast<unsigned long long>(n);
    if (invert && w == Complex{})
        throw Error(ErrorCode::ZeroBase, "negative integral power of zero");
    Complex result{1.0, 0.0};
    Complex base = w;
    while (k != 0) {
        if (k & 1ULL)
            result *= base;
        base *= base;
        k >>= 1;
    }
    return invert ? Complex{1.0, 0.0} / result : result;
}

void check_base(Complex w, double cut_margin, const char* what)
{
    if (w == Complex{})
        throw Error(ErrorCode::ZeroBase, std::string(what) + " of zero");
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
        throw Error(ErrorCode::NonFinite, std::string(what) + " of non-finite base");
    if (cut_margin > 0.0 && branch_margin(w) < cut_margin)
        throw Error(ErrorCode::BranchCutHit, std::string(what) + " base on branch cut (-inf, 0]");
}

} // namespace

Complex log_principal(Complex w, double cut_margin)
{
    check_base(w, cut_margin, "logarithm");
    return {std::log(std::abs(w)), principal_arg(w)};
}

Complex pow_principal(Complex w, Complex c, double cut_margin)
{
    if (is_integral_exponent(c))
        return integer_power(w, static_cast<long long>(std::round(c.real())));
    check_base(w, cut_margin, "power");
    return std::exp(c * Complex{std::log(std::abs(w)), principal_arg(w)});
}

} // namespace subord
