#pragma once

#include <complex>
#include <string>
#include <vector>

namespace fuzzylab {

using Complex = std::complex<double>;

/// Dense complex square matrix, the carrier of every projected observable.
/// Row-major storage; entry (r, c) is <e_r, A e_c>.
class OperatorMatrix {
public:
    OperatorMatrix() = default;
    explicit OperatorMatrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim) {}

    static OperatorMatrix identity(int dim);
    static OperatorMatrix diagonal(const std::vector<Complex>& d);
    static OperatorMatrix diagonal(const std::vector<double>& d);

    int dim() const { return dim_; }

    Complex& operator()(int r, int c) { return a_[static_cast<size_t>(r) * dim_ + c]; }
    const Complex& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * dim_ + c]; }

    const std::vector<Complex>& data() const { return a_; }

    OperatorMatrix adjoint() const;
    Complex trace() const;
    double max_abs() const;
    double frobenius() const;
    /// Hermitian iff max-entry |A - adjoint(A)| <= 1e-12 * dim.
    bool is_hermitian() const { return asymmetry() <= 1e-12 * dim_; }
    /// max-entry |A - adjoint(A)|, the diagnostic reported on rejects.
    double asymmetry() const;

    std::vector<Complex> apply(const std::vector<Complex>& v) const;

    OperatorMatrix& operator+=(const OperatorMatrix& o);
    OperatorMatrix& operator-=(const OperatorMatrix& o);
    OperatorMatrix& operator*=(Complex s);

    friend OperatorMatrix operator+(OperatorMatrix a, const OperatorMatrix& b) { return a += b; }
    friend OperatorMatrix operator-(OperatorMatrix a, const OperatorMatrix& b) { return a -= b; }
    friend OperatorMatrix operator*(OperatorMatrix a, Complex s) { return a *= s; }
    friend OperatorMatrix operator*(Complex s, OperatorMatrix a) { return a *= s; }
    friend OperatorMatrix operator*(OperatorMatrix a, double s) { return a *= Complex(s, 0); }
    friend OperatorMatrix operator*(double s, OperatorMatrix a) { return a *= Complex(s, 0); }
    friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);

private:
    int dim_ = 0;
    std::vector<Complex> a_;
};

/// Exact complex matrix product; rejects on dimension mismatch.
OperatorMatrix matmul(const OperatorMatrix& a, const OperatorMatrix& b);

/// AB - BA.
OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b);

/// AB + BA.
OperatorMatrix anticommutator(const OperatorMatrix& a, const OperatorMatrix& b);

/// A^n by repeated multiplication, n >= 0.
OperatorMatrix matrix_power(const OperatorMatrix& a, int n);

/// Horner evaluation of sum_i coeffs[i] A^i (coeffs ascending).
/// Accumulates in extended precision so that ill-conditioned interpolation
/// polynomials (Lagrange projectors on integer spectra) stay usable.
OperatorMatrix matrix_polynomial(const OperatorMatrix& a, const std::vector<double>& coeffs);
OperatorMatrix matrix_polynomial(const OperatorMatrix& a, const std::vector<long double>& coeffs);

struct SpectralDecomposition {
    std::vector<double> eigenvalues;   // ascending
    OperatorMatrix eigenvectors;       // unitary, columns; first nonzero component real positive
};

/// Full decomposition of a Hermitian matrix by cyclic Jacobi rotations.
/// Rejects non-Hermitian input, reporting the max-asymmetry diagnostic.
SpectralDecomposition hermitian_eig(const OperatorMatrix& a);

struct OperatorNormResult {
    double value = 0.0;
    bool converged = true;
    int iterations = 0;
};

/// Largest singular value via power iteration on A^H A.
/// Deterministic all-ones start vector; relative accuracy 1e-10;
/// accepts after relative change < 1e-12 over 5 iterations, caps at 10000.
OperatorNormResult operator_norm_detailed(const OperatorMatrix& a);
double operator_norm(const OperatorMatrix& a);

/// exp(i * scale * H) for Hermitian H, via the spectral decomposition.
OperatorMatrix exp_i_hermitian(const OperatorMatrix& h, double scale = 1.0);

/// Coefficients (ascending) of the Lagrange polynomial through the given
/// nodes that is 1 at nodes[select] and 0 at the others.
std::vector<long double> lagrange_projector_coeffs(const std::vector<double>& nodes, int select);

/// Dimension of the span of words in the generators, grown by
/// length until it saturates or max_len is reached; used by the
/// algebra-generation checks. Rank threshold is relative (1e-8).
int word_span_dimension(const std::vector<OperatorMatrix>& generators, int max_len);

}  // namespace fuzzylab
