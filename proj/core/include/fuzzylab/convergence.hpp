#pragma once

#include <functional>
#include <vector>

#include "fuzzylab/circle_model.hpp"
#include "fuzzylab/fuzzy_harmonics.hpp"
#include "fuzzylab/sphere_model.hpp"
#include "fuzzylab/spherical_harmonics.hpp"

namespace fuzzylab {

/// Fourier coefficients phi_m for |m| <= N.
struct TruncatedFourier {
    int N = 0;
    std::vector<Complex> c;  // size 2N+1, index m+N

    TruncatedFourier() = default;
    explicit TruncatedFourier(int n) : N(n), c(2 * n + 1) {}

    Complex coeff(int m) const { return (std::abs(m) <= N) ? c[m + N] : Complex(0.0, 0.0); }
    void set(int m, Complex v) { c[m + N] = v; }
    double norm() const;
    double max_coeff() const;                 // F = max_m |f_m|
    double sup_norm(int samples = 4096) const;  // max |f(phi)| on a dense grid
    TruncatedFourier normalized() const;
};

/// Exact convolution (f phi)_n = sum_m f_{n-m} phi_m.
TruncatedFourier convolve(const TruncatedFourier& f, const TruncatedFourier& phi);

/// Spherical-harmonic coefficients phi_l^m for l <= L.
struct TruncatedSphFn {
    int L = 0;
    std::vector<Complex> c;  // sphere_index layout

    TruncatedSphFn() = default;
    explicit TruncatedSphFn(int l) : L(l), c(static_cast<size_t>(l + 1) * (l + 1)) {}

    Complex coeff(int l, int m) const {
        return (l <= L && std::abs(m) <= l) ? c[sphere_index(l, m)] : Complex(0.0, 0.0);
    }
    void set(int l, int m, Complex v) { c[sphere_index(l, m)] = v; }
    double norm() const;
    double max_coeff() const;
    double sup_norm(const SphereGrid& grid) const;
    TruncatedSphFn normalized() const;
};

/// Samples the function on the grid (theta-major layout).
std::vector<Complex> sample_on_grid(const TruncatedSphFn& f, const SphereGrid& grid);

/// Pointwise product projected back onto harmonics up to L_out; exact for
/// band-limited factors when the grid resolves the combined degree.
TruncatedSphFn multiply_sph(const TruncatedSphFn& f, const TruncatedSphFn& g,
                            const SphereGrid& grid, int L_out);

/// k(lambda) schedules: the single-integer default, the two strong-limit
/// schedules, and a custom hook.
struct KSchedule {
    enum class Kind { default_schedule, prop_circle, prop_sphere, custom };
    Kind kind = Kind::default_schedule;
    std::function<double(int)> custom_fn;

    double k(int lambda) const;
    /// smallest k the named proposition requires at this lambda (the custom
    /// and default kinds have no requirement)
    double proposition_floor(int lambda, bool circle) const;

    static KSchedule default_schedule() { return {Kind::default_schedule, {}}; }
    static KSchedule prop_circle() { return {Kind::prop_circle, {}}; }
    static KSchedule prop_sphere() { return {Kind::prop_sphere, {}}; }
    static KSchedule custom(std::function<double(int)> f) { return {Kind::custom, std::move(f)}; }
};

/// f^_Lambda = sum_{|h| <= 2 Lambda} f_h eta^h with eta^± = sqrt(2) xi^±;
/// coefficients beyond |h| = 2 Lambda are dropped.
OperatorMatrix fhat_circle(const TruncatedFourier& f, const CircleModel& model);

/// The same operator applied in coefficient space, exactly:
/// (f^ phi)_n = sum_m f_{n-m} phi_m alpha_{m,n}, |n| <= Lambda.
TruncatedFourier apply_fhat_circle(const TruncatedFourier& f, const TruncatedFourier& phi,
                                   int lambda, double k);

struct DecayRow {
    int lambda = 0;
    double k = 0.0;
    double error = 0.0;
    double bound = 0.0;
    bool within_bound = false;
    bool schedule_warning = false;  // k below the proposition floor
};

/// ||(f - f^_Lambda) phi|| per lambda, with the three-term tail bound column.
/// Refuses consistency-flagged models unless force is set.
std::vector<DecayRow> strong_convergence_circle(const TruncatedFourier& f,
                                                const TruncatedFourier& phi, const KSchedule& sched,
                                                const std::vector<int>& lambdas, bool force = false);

/// ||(fg) phi - f^ g^ phi|| with the triangle bound column.
std::vector<DecayRow> strong_convergence_circle_product(const TruncatedFourier& f,
                                                        const TruncatedFourier& g,
                                                        const TruncatedFourier& phi,
                                                        const KSchedule& sched,
                                                        const std::vector<int>& lambdas,
                                                        bool force = false);

struct NormBoundRow {
    int lambda = 0;
    double k = 0.0;
    double op_norm = 0.0;
    double bound = 0.0;  // 3 ||f||_inf
    bool within_bound = false;
};

std::vector<NormBoundRow> uniform_norm_bound_circle(const TruncatedFourier& f,
                                                    const std::vector<int>& lambdas,
                                                    const KSchedule& sched);

/// f^_Lambda = sum f_l^m Y^_l^m; degree > 2 Lambda coefficients are dropped
/// (flagged through *dropped when given).
OperatorMatrix fhat_sphere(const TruncatedSphFn& f, const SphereModel& model,
                           const FuzzyHarmonicSet& harmonics, bool* dropped = nullptr);

std::vector<DecayRow> strong_convergence_sphere(const TruncatedSphFn& f, const TruncatedSphFn& phi,
                                                const KSchedule& sched,
                                                const std::vector<int>& lambdas,
                                                const SphereGrid& grid, bool force = false);

std::vector<DecayRow> strong_convergence_sphere_product(const TruncatedSphFn& f,
                                                        const TruncatedSphFn& g,
                                                        const TruncatedSphFn& phi,
                                                        const KSchedule& sched,
                                                        const std::vector<int>& lambdas,
                                                        const SphereGrid& grid, bool force = false);

/// Operator-norm gap witnesses, computed in an ambient band (L = lambda + 3):
/// circle ||(eta^+ - u) u^{lambda+1}|| == 1; sphere pm and zero components
/// of ||(xbar^a - t^a) Y_{lambda+1}||.
double circle_witness(int lambda, double k);

struct SphereWitness {
    double x_pm = 0.0;
    double x_zero = 0.0;
};

SphereWitness sphere_witness(int lambda);

/// Closed forms of the sphere witnesses from the ladder coefficients:
/// x_pm = |B_{lambda+1}^{+,lambda+1}|, x_zero = sqrt(A^2 + B^2) at (l,m) =
/// (lambda+1, 0).
SphereWitness sphere_witness_closed_form(int lambda);

}  // namespace fuzzylab
