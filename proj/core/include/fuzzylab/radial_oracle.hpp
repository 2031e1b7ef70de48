#pragma once

#include <vector>

#include "fuzzylab/check_report.hpp"

namespace fuzzylab {

/// Real polynomial, ascending coefficients.
struct Polynomial {
    std::vector<double> c;

    double eval(double x) const;
    Polynomial derivative() const;
    int degree() const { return c.empty() ? 0 : static_cast<int>(c.size()) - 1; }

    static Polynomial constant(double v) { return {{v}}; }
    static Polynomial linear(double c0, double c1) { return {{c0, c1}}; }
};

/// Closed form of the Gaussian moment integral over the whole line:
/// int e^{-a x^2 + b x} x^n dx, a > 0, n >= 0.
double gaussian_moment(double a, double b, int n);

/// Same moment divided by e^{b^2/4a} sqrt(pi/a); the stable building block
/// when the exponent would overflow.
double gaussian_moment_reduced(double a, double b, int n);

/// Ground-state well depth: solves
/// -sqrt(1/2k) V0 - (1/2k)^{3/2} V0^2 = (1 + V0/k)^{3/2}
/// by bisection + Newton in [-2 sqrt(2k), 0] to 1e-12. Rejects an empty bracket.
double solve_V0(double k);

struct EnergySolveResult {
    double E = 0.0;         // calibrated so E_{0,0} = 0
    double E_prime = 0.0;   // root of the level condition, E - V0
    double residual = 0.0;  // condition residual at the root
    bool physical = true;   // root isolated in (0, k)
};

/// Solves E'^2/(2(k-E')) + E' - m^2 = (2n+1) sqrt(2(k-E')) for the physical
/// root; the left side minus the right is strictly increasing on (0, k), so
/// the branch selection is a bracketed bisection + Newton polish.
EnergySolveResult solve_Em(double k, int m, int n);

/// Oscillator data of a radial profile (n = hermite_order excitations).
struct GaussianProfile {
    double center = 0.0;     // rho~_m or r~_l
    double stiffness = 0.0;  // sqrt(k_m) or sqrt(k_l)
    int hermite_order = 0;
};

/// Circle profile from the exact level solve: k_m = 2(k - E'_m), rho~ = E'/k_m.
GaussianProfile circle_profile(double k, int m);
/// Sphere profile from the closed forms: k_l = 2k + 3l(l+1).
GaussianProfile sphere_profile(double k, int l);

struct RadialGrid {
    double r_min = 0.0;
    double r_max = 0.0;
    int n_points = 0;  // subintervals; interior nodes n_points - 1

    double spacing() const { return (r_max - r_min) / n_points; }
};

/// Grid covering center ± 12 oscillator lengths with 160 points per length.
RadialGrid default_radial_grid(int D, double k, int angular);

/// Lowest n_levels eigenvalues of the radial finite-difference problem with
/// Dirichlet ends: D=3 uses -f'' + [V0 + 2k(r-1)^2 + l(l+1)/r^2] f = E f;
/// D=2 works in rho = ln r where the weight e^{2 rho} turns the problem into
/// a symmetrized generalized one. 3-point Laplacian, Richardson-extrapolated
/// over the grid and its refinement. Rejects a grid with fewer than 40
/// points per oscillator length.
std::vector<double> fd_spectrum(int D, double k, int angular, int n_levels, const RadialGrid& grid);

/// Lowest n_levels eigenvalues of a symmetric tridiagonal matrix by Sturm
/// bisection (deterministic, 1e-14 relative).
std::vector<double> tridiagonal_lowest(const std::vector<double>& diag,
                                       const std::vector<double>& off, int n_levels);

struct ElementResult {
    double exact = 0.0;  // Gaussian closed-form / quadrature route
    double asym = 0.0;   // truncated asymptotic route
    bool has_asym = true;
};

/// Matrix element <psi_m', f(rho) e^{i h phi} psi_m> of f = poly * e^{n_exp rho}
/// computed two ways: exactly through the Gaussian moment closed form with
/// the solved level parameters, and through the truncated heat-kernel
/// asymptotics (series through order 1/k, K set to 1). Zero by grading
/// unless m' - m == h. With volume=false the element is taken in the
/// auxiliary flat-measure oscillator space (no e^{2 rho}); only the exact
/// route is meaningful there.
ElementResult circle_matrix_element(const Polynomial& poly, int n_exp, int h, int m, int mprime,
                                    double k, bool volume = true);

/// The prefactor K_{m,m'} of the element formula, evaluated through the
/// cancellation-free closed form; 1 + O(k^{-3/2}).
double circle_K_factor(double k, int m, int mprime);

/// <psi_{m-1}, d_+ psi_m> both ways: exact, and the asymptotic series
/// through order 1/k with the tail coefficients the exact integral fixes.
ElementResult circle_derivative_element(double k, int m);

/// int f_l f_L g dr for polynomial g: exact Gaussian closed form vs the
/// truncated even-derivative series with the shifted center r^_{l,L}.
ElementResult sphere_radial_integral(const Polynomial& g, int l, int L, double k);

/// Same integral for g = 1/r (adaptive quadrature, 1e-12 relative).
ElementResult sphere_radial_integral_inverse_r(int l, int L, double k);

/// radialDerivIntegral: int f_l f'_{l-1} dr by the Gaussian closed form,
/// against -l/sqrt(2k) + 18 l^3/(8k sqrt(2k)).
ElementResult sphere_deriv_integral(int l, double k);

struct TailShift {
    double exact = 0.0;     // int_0^inf e^{-a(r+b)^2} dr
    double estimate = 0.0;  // e^{-a b^2}/(2ba) [1 - 1/(2ab^2)]
    double ratio = 1.0;     // estimate / exact, computed in log space
    double log_exact = 0.0;
    double log_estimate = 0.0;
};

TailShift tail_shift_bound(double a, double b);

/// Deterministic adaptive quadrature (bisected 10-point Gauss rule),
/// relative tolerance ~1e-12.
double adaptive_quadrature(const std::vector<double>& breakpoints,
                           double (*f)(double, const void*), const void* ctx, double rel_tol);

struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    int n = 0;
};

/// Least-squares fit of log|y| against log x, skipping zero entries.
SlopeFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace fuzzylab
