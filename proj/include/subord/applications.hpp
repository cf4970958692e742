#pragma once

#include "subord/analytic_map.hpp"
#include "subord/disk_geometry.hpp"
#include "subord/params.hpp"

#include <optional>
#include <string_view>

namespace subord {

enum class ApplicationKind { Theorem31, Cor31, Cor32, Cor33, Philike };

std::string_view to_string(ApplicationKind k);

struct ApplicationExpr {
    ApplicationKind kind;
    /// The expression whose subordination is asserted.
    AnalyticMap expr;
    /// The quantity the conclusion is about: zf'/f, or zf'/Phi(f).
    AnalyticMap ratio;
};

/// Rewrites m as z * u(z) structurally, or nothing if the tree does not expose
/// a factor of z. Handles z, products, quotients with a factorable numerator,
/// sums and differences of factorable terms, positive integral powers and
/// compositions of factorable maps.
std::optional<AnalyticMap> factor_z(const AnalyticMap& m);

/// zf'/f. When f = z u(z) the tree is 1 + z u'/u, which is regular at 0;
/// otherwise the quotient is built directly. Throws NotNormalized unless
/// f(0) = 0 and f'(0) = 1 within 1e-9.
AnalyticMap starlike_ratio(const AnalyticMap& f);

/// (zf'/f)^alpha ((1 - lambda) zf'/f + lambda (1 + zf''/f'))^mu, using alpha,
/// mu and lambda from ps. Throws BadParams without lambda.
ApplicationExpr theorem31_expr(const AnalyticMap& f, const ParamSet& ps);

///   Cor31  (1 - alpha) zf'/f + alpha (1 + zf''/f')
///   Cor32  (1 + zf''/f') / (zf'/f)
///   Cor33  zf'/f (1 + alpha zf''/f')
ApplicationExpr corollary_expr(const AnalyticMap& f, ApplicationKind which, Complex alpha);

/// p (1 + alpha zf''/f' + alpha z (f' - (Phi(f))')/Phi(f)) with
/// p = zf'/Phi(f). Factors of z are cancelled when f and Phi expose them.
/// Throws NotNormalized for f and PhiNotNormalized unless Phi(0) = 0 and
/// Phi'(0) = 1 within 1e-9.
ApplicationExpr philike_expr(const AnalyticMap& f, const AnalyticMap& Phi, Complex alpha);

/// Max over the grid of |philike_expr - (alpha p^2 + (1 - alpha) p + alpha z p')|.
double philike_identity_residual(const AnalyticMap& f, const AnalyticMap& Phi, Complex alpha,
                                 const SampleGrid& grid);

} // namespace subord
