#pragma once

#include <vector>

#include "fuzzylab/operator_matrix.hpp"

namespace fuzzylab {

/// Tensor grid for quadrature on S^2: Gauss-Legendre nodes in cos(theta)
/// times a uniform phi grid. Exact for cos(theta)-polynomials of degree
/// <= 2*n_theta-1 and phi-modes |m| < n_phi.
struct SphereGrid {
    int n_theta = 0;
    int n_phi = 0;
    std::vector<double> cos_theta;   // Gauss-Legendre nodes, ascending
    std::vector<double> w_theta;     // matching weights, sum 2
    std::vector<double> phi;         // uniform, weight 2*pi/n_phi each

    SphereGrid() = default;
    SphereGrid(int n_theta, int n_phi);

    /// Defaults per cutoff: n_theta = 2*lambda_max+16, n_phi = 4*lambda_max+33.
    static SphereGrid for_lambda(int lambda_max);

    size_t size() const { return static_cast<size_t>(n_theta) * n_phi; }
    double weight(int i_theta) const { return w_theta[i_theta] * 2.0 * 3.14159265358979323846 / n_phi; }
};

/// Gauss-Legendre nodes and weights on [-1, 1] (Newton on the recurrence).
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// Orthonormal spherical harmonic with Condon-Shortley phase, stable upward
/// recurrence on fully normalized associated Legendre functions (l <= 64).
/// Rejects |m| > l.
Complex eval_Ylm(int l, int m, double theta, double phi);

/// Same harmonic from cos(theta) and the complex phase e^{i phi}; avoids
/// recomputing trig inside grid loops.
Complex eval_Ylm_cs(int l, int m, double cos_theta, Complex e_iphi);

/// Sum of weights * conj(f) * g over the grid; samples laid out
/// theta-major (index i_theta * n_phi + i_phi). Rejects shape mismatch.
Complex sphere_inner_product(const std::vector<Complex>& f_samples,
                             const std::vector<Complex>& g_samples, const SphereGrid& grid);

}  // namespace fuzzylab
