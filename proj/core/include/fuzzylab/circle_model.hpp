#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fuzzylab/check_report.hpp"
#include "fuzzylab/operator_matrix.hpp"

namespace fuzzylab {

/// The D=2 fuzzy circle on the (2*lambda+1)-dimensional space spanned by the
/// angular modes m in [-lambda, lambda]; basis index m maps to row m+lambda.
struct CircleModel {
    int lambda = 0;
    double k = 0.0;
    int dim = 0;
    /// false when lambda^2 < 2*sqrt(2k) - 2 is violated; construction is
    /// still permitted for experiments, consumers may refuse flagged models.
    bool consistency_ok = true;

    OperatorMatrix xi_plus, xi_minus;  // xi_minus == adjoint(xi_plus) exactly
    OperatorMatrix Lbar;               // diag(m)
    OperatorMatrix Hbar;               // Lbar^2
    OperatorMatrix R2;                 // xi+ xi- + xi- xi+
    std::vector<OperatorMatrix> proj;  // rank-1 projectors P~_m, index m+lambda

    const OperatorMatrix& projector(int m) const { return proj[m + lambda]; }
};

/// k(lambda) = lambda^2 (lambda+1)^2, the one-parameter schedule that turns
/// the commutator into the single-integer family.
double default_k_schedule(int lambda);

CircleModel build_circle(int lambda, double k);

/// The operator set alone, as produced by O(2) conjugations; identity checks
/// run on either a freshly built model or a transformed set.
struct CircleOperators {
    int lambda = 0;
    double k = 0.0;
    OperatorMatrix xi_plus, xi_minus, Lbar;
    std::vector<OperatorMatrix> proj;
};

CircleOperators operators_of(const CircleModel& m);

/// Residuals of the defining identities: nilpotency of xi^±, the minimal
/// polynomial of Lbar, [Lbar, xi^±] = ±xi^±, the commutator closed form,
/// the R^2 closed form, and every projector rebuilt as a polynomial in Lbar.
CheckReport verify_circle_identities(const CircleModel& m);
CheckReport verify_circle_relations(const CircleOperators& ops);

/// su(2) ladder realization: Lbar = E0 and xi^± = f_±(E0) E^±.
struct So3Realization {
    int lambda = 0;
    double k = 0.0;
    OperatorMatrix E_plus, E_minus, E0;
    std::function<double(double)> f_plus, f_minus, f_u;
    CheckReport report;  // reconstruction + Casimir residuals
};

So3Realization build_so3_realization(const CircleModel& m);

enum class O2Kind { rotation, reflection };

/// Rotation conjugates by exp(i theta E0); reflection by exp(i pi E1) with
/// E1 = (E+ + E-)/sqrt(2), sending Lbar -> -Lbar and xi^± -> xi^∓.
CircleOperators o2_transform(const CircleModel& m, O2Kind kind, double theta = 0.0);

/// Projected derivative pair populated from the order-1/k asymptotic band
/// coefficients (taken as definitions of the truncated operators), plus
/// their commutator and anticommutator for the structure checks.
struct ProjectedDerivatives {
    OperatorMatrix d_plus, d_minus;
    OperatorMatrix commutator_pm;      // [d+, d-]
    OperatorMatrix anticommutator_pm;  // {d+, d-}
};

ProjectedDerivatives projected_derivatives(const CircleModel& m);

/// dim of the span of words in {xi+, xi-}; equals dim^2 when the pair
/// generates the full endomorphism algebra.
int circle_generated_dimension(const CircleModel& m);

/// CSV dump of one operator, columns row,col,re,im.
std::string operator_to_csv(const OperatorMatrix& op);

}  // namespace fuzzylab
