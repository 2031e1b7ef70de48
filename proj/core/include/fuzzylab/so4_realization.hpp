#pragma once

#include <array>
#include <vector>

#include "fuzzylab/check_report.hpp"
#include "fuzzylab/sphere_model.hpp"

namespace fuzzylab {

/// su(2)+su(2) realization of the sphere algebra: X_a carries the d_l
/// weights, g(l) rescales it back to xbar^a, E^1/E^2 split the two factors.
struct So4Realization {
    int lambda = 0;
    double k = 0.0;
    std::array<OperatorMatrix, 3> X_sph;   // X_a, a+1 indexing
    std::array<OperatorMatrix, 3> X_cart;  // X_i
    std::array<OperatorMatrix, 3> L_cart;
    std::array<OperatorMatrix, 3> E1, E2;  // (L±X)/2
    OperatorMatrix lambda_op;              // diag(l)
    std::vector<double> g;                 // g(0)..g(lambda), product form
    std::vector<double> d;                 // d_0..d_{lambda+1}
    CheckReport report;
};

So4Realization build_so4_realization(const SphereModel& m);

/// g(l) by the finite product form.
double g_product_form(int l, int lambda, double k);

/// g(l) by the Gamma-function closed form, evaluated through complex
/// log-Gamma so the conjugate pair never underflows; agrees with the
/// product form to 1e-10 relative.
double g_gamma_form(int l, int lambda, double k);

/// Complex log-Gamma (Lanczos, ~1e-13 relative for Re z > 0).
std::complex<double> log_gamma(std::complex<double> z);

/// L^2 ladder families built from chi_i = i eps_ijk X_j L_k:
/// theta^-_i = [X_i lambda - chi_i](2 lambda - 1)(lambda - 1),
/// theta^+_i = [X_i (lambda+1) + chi_i] lambda (2 lambda + 3).
struct ThetaLadders {
    std::array<OperatorMatrix, 3> chi;
    std::array<OperatorMatrix, 3> theta_minus, theta_plus;
    CheckReport report;  // utile2, ladder property, adjoint pairing, L2 eigenaction
};

ThetaLadders theta_ladders(const So4Realization& r);

enum class O3Kind { rotation, parity };

/// Rotation conjugates by exp(i alpha_i Lbar_i); parity flips the relative
/// sign of the two su(2) factors, acting as diag((-1)^(lambda-l)).
struct TransformedSphere {
    SphereOperators ops;
    std::array<OperatorMatrix, 3> X_cart;  // transformed so(4) coordinates
    CheckReport report;                    // transformation laws
};

TransformedSphere o3_transform(const SphereModel& m, const So4Realization& r, O3Kind kind,
                               const std::array<double, 3>& alpha = {0.0, 0.0, 0.0});

}  // namespace fuzzylab
