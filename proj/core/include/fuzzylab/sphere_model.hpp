#pragma once

#include <array>
#include <vector>

#include "fuzzylab/check_report.hpp"
#include "fuzzylab/ladder_tables.hpp"
#include "fuzzylab/operator_matrix.hpp"

namespace fuzzylab {

/// Basis flattening for the (lambda+1)^2-dimensional sphere space: state
/// (l, m) with 0 <= l <= lambda, |m| <= l sits at index l^2 + l + m.
inline int sphere_index(int l, int m) { return l * l + l + m; }

/// The D=3 fuzzy sphere. Spherical components are indexed a+1 for
/// a in {-1, 0, +1}; Cartesian components i-1 for i in {1, 2, 3}.
struct SphereModel {
    int lambda = 0;
    double k = 0.0;
    int dim = 0;
    bool consistency_ok = true;  // lambda(lambda+1) <= 2 sqrt(2k)

    std::array<OperatorMatrix, 3> x_sph;  // xbar^a
    std::array<OperatorMatrix, 3> x_cart; // xbar^i, Hermitian
    std::array<OperatorMatrix, 3> L_sph;  // Lbar_a
    std::array<OperatorMatrix, 3> L_cart; // Lbar_i, Hermitian
    OperatorMatrix L2;                    // Lbar_i Lbar_i
    OperatorMatrix Hbar;                  // diag l(l+1)
    OperatorMatrix R2;                    // xbar^a xbar^{-a}
    std::vector<OperatorMatrix> proj_l;   // P~_l, rank 2l+1
    std::vector<double> c;                // c_0..c_{lambda+1}, c_0 = c_{lambda+1} = 0

    const OperatorMatrix& x(int a) const { return x_sph[a + 1]; }
    const OperatorMatrix& L(int a) const { return L_sph[a + 1]; }
    const OperatorMatrix& xi(int i) const { return x_cart[i - 1]; }
    const OperatorMatrix& Li(int i) const { return L_cart[i - 1]; }
};

/// Builds the model from the ladder table; rejects a table that does not
/// cover lambda + 1, flags consistency violations.
SphereModel build_sphere(int lambda, double k, const LadderTable& ladders);

/// Operator bundle for identity checks, shared by the fresh build and the
/// O(3)-conjugated sets.
struct SphereOperators {
    int lambda = 0;
    double k = 0.0;
    std::array<OperatorMatrix, 3> x_cart, L_cart;
    std::array<OperatorMatrix, 3> x_sph;
    OperatorMatrix L2;
    std::vector<OperatorMatrix> proj_l;
};

SphereOperators operators_of(const SphereModel& m);

/// Residuals of the defining identities: spectra of L^2 and of L_3 on each
/// eigenspace, nilpotency of xbar^±, the so(3) vector laws, transversality,
/// the coordinate commutator with its K coefficient, and the R^2 closed form.
CheckReport verify_sphere_identities(const SphereModel& m);
CheckReport verify_sphere_relations(const SphereOperators& ops);

/// Levi-Civita symbol on indices 0..2.
double epsilon3(int i, int j, int h);

/// dim of the span of words in {xbar^+, xbar^-, xbar^0}.
int sphere_generated_dimension(const SphereModel& m);

}  // namespace fuzzylab
