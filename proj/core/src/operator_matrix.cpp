#include "fuzzylab/operator_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace fuzzylab {

OperatorMatrix OperatorMatrix::identity(int dim) {
    OperatorMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

OperatorMatrix OperatorMatrix::diagonal(const std::vector<Complex>& d) {
    OperatorMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.dim_; ++i) m(i, i) = d[i];
    return m;
}

OperatorMatrix OperatorMatrix::diagonal(const std::vector<double>& d) {
    OperatorMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.dim_; ++i) m(i, i) = d[i];
    return m;
}

OperatorMatrix OperatorMatrix::adjoint() const {
    OperatorMatrix m(dim_);
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
}

Complex OperatorMatrix::trace() const {
    Complex t = 0.0;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double OperatorMatrix::max_abs() const {
    double m = 0.0;
    for (const Complex& z : a_) m = std::max(m, std::abs(z));
    return m;
}

double OperatorMatrix::frobenius() const {
    double s = 0.0;
    for (const Complex& z : a_) s += std::norm(z);
    return std::sqrt(s);
}

double OperatorMatrix::asymmetry() const {
    double m = 0.0;
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c)
            m = std::max(m, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return m;
}

std::vector<Complex> OperatorMatrix::apply(const std::vector<Complex>& v) const {
    if (static_cast<int>(v.size()) != dim_)
        throw std::invalid_argument("OperatorMatrix::apply: vector length mismatch");
    std::vector<Complex> out(dim_, 0.0);
    for (int r = 0; r < dim_; ++r) {
        Complex s = 0.0;
        const Complex* row = a_.data() + static_cast<size_t>(r) * dim_;
        for (int c = 0; c < dim_; ++c) s += row[c] * v[c];
        out[r] = s;
    }
    return out;
}

OperatorMatrix& OperatorMatrix::operator+=(const OperatorMatrix& o) {
    if (o.dim_ != dim_) throw std::invalid_argument("operator+=: dimension mismatch");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

OperatorMatrix& OperatorMatrix::operator-=(const OperatorMatrix& o) {
    if (o.dim_ != dim_) throw std::invalid_argument("operator-=: dimension mismatch");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

OperatorMatrix& OperatorMatrix::operator*=(Complex s) {
    for (Complex& z : a_) z *= s;
    return *this;
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) { return matmul(a, b); }

OperatorMatrix matmul(const OperatorMatrix& a, const OperatorMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("matmul: dimension mismatch");
    const int n = a.dim();
    OperatorMatrix out(n);
    for (int r = 0; r < n; ++r) {
        for (int k = 0; k < n; ++k) {
            const Complex ark = a(r, k);
            if (ark == Complex(0.0, 0.0)) continue;
            for (int c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
        }
    }
    return out;
}

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
    return matmul(a, b) - matmul(b, a);
}

OperatorMatrix anticommutator(const OperatorMatrix& a, const OperatorMatrix& b) {
    return matmul(a, b) + matmul(b, a);
}

OperatorMatrix matrix_power(const OperatorMatrix& a, int n) {
    if (n < 0) throw std::invalid_argument("matrix_power: negative exponent");
    OperatorMatrix out = OperatorMatrix::identity(a.dim());
    for (int i = 0; i < n; ++i) out = matmul(out, a);
    return out;
}

namespace {

using LComplex = std::complex<long double>;

std::vector<LComplex> widen(const OperatorMatrix& a) {
    std::vector<LComplex> w(a.data().size());
    for (size_t i = 0; i < w.size(); ++i)
        w[i] = LComplex(a.data()[i].real(), a.data()[i].imag());
    return w;
}

}  // namespace

OperatorMatrix matrix_polynomial(const OperatorMatrix& a, const std::vector<long double>& coeffs) {
    const int n = a.dim();
    std::vector<LComplex> aw = widen(a);
    std::vector<LComplex> p(static_cast<size_t>(n) * n, LComplex(0, 0));
    if (coeffs.empty()) return OperatorMatrix(n);
    for (int i = 0; i < n; ++i) p[static_cast<size_t>(i) * n + i] = coeffs.back();
    std::vector<LComplex> t(p.size());
    for (int ci = static_cast<int>(coeffs.size()) - 2; ci >= 0; --ci) {
        std::fill(t.begin(), t.end(), LComplex(0, 0));
        for (int r = 0; r < n; ++r)
            for (int k = 0; k < n; ++k) {
                const LComplex ark = aw[static_cast<size_t>(r) * n + k];
                if (ark == LComplex(0, 0)) continue;
                for (int c = 0; c < n; ++c)
                    t[static_cast<size_t>(r) * n + c] += ark * p[static_cast<size_t>(k) * n + c];
            }
        for (int i = 0; i < n; ++i) t[static_cast<size_t>(i) * n + i] += coeffs[ci];
        p.swap(t);
    }
    OperatorMatrix out(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            const LComplex& z = p[static_cast<size_t>(r) * n + c];
            out(r, c) = Complex(static_cast<double>(z.real()), static_cast<double>(z.imag()));
        }
    return out;
}

OperatorMatrix matrix_polynomial(const OperatorMatrix& a, const std::vector<double>& coeffs) {
    return matrix_polynomial(a, std::vector<long double>(coeffs.begin(), coeffs.end()));
}

SpectralDecomposition hermitian_eig(const OperatorMatrix& a) {
    const double asym = a.asymmetry();
    if (asym > 1e-12 * std::max(1, a.dim()) * std::max(1.0, a.max_abs()))
        throw std::invalid_argument("hermitian_eig: input not Hermitian, max asymmetry " +
                                    std::to_string(asym));
    const int n = a.dim();
    OperatorMatrix m = a;
    // symmetrize so floating asymmetry cannot bias the sweeps
    for (int r = 0; r < n; ++r)
        for (int c = r; c < n; ++c) {
            Complex z = 0.5 * (m(r, c) + std::conj(m(c, r)));
            m(r, c) = z;
            m(c, r) = std::conj(z);
        }
    OperatorMatrix v = OperatorMatrix::identity(n);
    const double norm = std::max(m.frobenius(), 1e-300);

    auto offdiag = [&]() {
        double s = 0.0;
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                if (r != c) s += std::norm(m(r, c));
        return std::sqrt(s);
    };

    const int max_sweeps = 60;
    for (int sweep = 0; sweep < max_sweeps && offdiag() > 1e-13 * norm; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex apq = m(p, q);
                const double g = std::abs(apq);
                if (g <= 1e-18 * norm) continue;
                // phase factor u makes the pivot real, then a real rotation zeroes it
                const Complex u = apq / g;
                const double app = m(p, p).real();
                const double aqq = m(q, q).real();
                const double tau = (aqq - app) / (2.0 * g);
                const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // columns of U on the (p,q) plane: U(p,p)=c, U(p,q)=s, U(q,p)=-s u*, U(q,q)=c u*
                for (int i = 0; i < n; ++i) {
                    const Complex mip = m(i, p), miq = m(i, q);
                    m(i, p) = c * mip - s * std::conj(u) * miq;
                    m(i, q) = s * mip + c * std::conj(u) * miq;
                    const Complex vip = v(i, p), viq = v(i, q);
                    v(i, p) = c * vip - s * std::conj(u) * viq;
                    v(i, q) = s * vip + c * std::conj(u) * viq;
                }
                for (int i = 0; i < n; ++i) {
                    const Complex mpi = m(p, i), mqi = m(q, i);
                    m(p, i) = c * mpi - s * u * mqi;
                    m(q, i) = s * mpi + c * u * mqi;
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = m(i, i).real();
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return ev[i] < ev[j]; });

    SpectralDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = OperatorMatrix(n);
    for (int j = 0; j < n; ++j) {
        out.eigenvalues[j] = ev[order[j]];
        double colmax = 0.0;
        for (int i = 0; i < n; ++i) colmax = std::max(colmax, std::abs(v(i, order[j])));
        Complex phase = 1.0;
        for (int i = 0; i < n; ++i) {
            const Complex z = v(i, order[j]);
            if (std::abs(z) > 1e-12 * colmax) {
                phase = std::conj(z) / std::abs(z);
                break;
            }
        }
        for (int i = 0; i < n; ++i) out.eigenvectors(i, j) = phase * v(i, order[j]);
    }
    return out;
}

OperatorNormResult operator_norm_detailed(const OperatorMatrix& a) {
    const int n = a.dim();
    OperatorNormResult res;
    if (n == 0) return res;
    // B = A^H A applied as two mat-vecs per step
    const OperatorMatrix ah = a.adjoint();
    std::vector<Complex> x(n, Complex(1.0 / std::sqrt(static_cast<double>(n)), 0.0));

    auto norm2 = [](const std::vector<Complex>& v) {
        double s = 0.0;
        for (const Complex& z : v) s += std::norm(z);
        return std::sqrt(s);
    };

    double lambda = 0.0;
    int stable = 0;
    const int max_iter = 10000;
    for (int it = 1; it <= max_iter; ++it) {
        std::vector<Complex> y = ah.apply(a.apply(x));
        const double ny = norm2(y);
        res.iterations = it;
        if (ny == 0.0) {
            res.value = 0.0;
            return res;
        }
        double next = 0.0;  // Rayleigh quotient x^H B x = x^H y
        for (int i = 0; i < n; ++i) next += (std::conj(x[i]) * y[i]).real();
        for (int i = 0; i < n; ++i) x[i] = y[i] / ny;
        const double rel = std::abs(next - lambda) / std::max(next, 1e-300);
        lambda = next;
        stable = (rel < 1e-12) ? stable + 1 : 0;
        if (stable >= 5) {
            res.value = std::sqrt(std::max(lambda, 0.0));
            return res;
        }
    }
    res.converged = false;
    res.value = std::sqrt(std::max(lambda, 0.0));
    return res;
}

double operator_norm(const OperatorMatrix& a) { return operator_norm_detailed(a).value; }

OperatorMatrix exp_i_hermitian(const OperatorMatrix& h, double scale) {
    const SpectralDecomposition d = hermitian_eig(h);
    const int n = h.dim();
    OperatorMatrix out(n);
    // V diag(e^{i s lambda}) V^H
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            Complex s = 0.0;
            for (int j = 0; j < n; ++j)
                s += d.eigenvectors(r, j) * std::polar(1.0, scale * d.eigenvalues[j]) *
                     std::conj(d.eigenvectors(c, j));
            out(r, c) = s;
        }
    return out;
}

std::vector<long double> lagrange_projector_coeffs(const std::vector<double>& nodes, int select) {
    const int n = static_cast<int>(nodes.size());
    if (select < 0 || select >= n) throw std::invalid_argument("lagrange_projector_coeffs: bad index");
    std::vector<long double> c{1.0L};
    long double den = 1.0L;
    for (int i = 0; i < n; ++i) {
        if (i == select) continue;
        // multiply by (x - nodes[i])
        std::vector<long double> next(c.size() + 1, 0.0L);
        for (size_t j = 0; j < c.size(); ++j) {
            next[j + 1] += c[j];
            next[j] -= c[j] * static_cast<long double>(nodes[i]);
        }
        c.swap(next);
        den *= static_cast<long double>(nodes[select]) - static_cast<long double>(nodes[i]);
    }
    for (long double& x : c) x /= den;
    return c;
}

int word_span_dimension(const std::vector<OperatorMatrix>& generators, int max_len) {
    if (generators.empty()) return 0;
    const int n = generators.front().dim();
    const size_t vlen = static_cast<size_t>(n) * n;
    std::vector<std::vector<Complex>> basis;  // orthonormal, vectorized

    auto add = [&](const OperatorMatrix& m) {
        std::vector<Complex> v(m.data());
        double n0 = 0.0;
        for (const Complex& z : v) n0 += std::norm(z);
        n0 = std::sqrt(n0);
        if (n0 == 0.0) return false;
        for (int pass = 0; pass < 2; ++pass) {  // reorthogonalize once
            for (const auto& b : basis) {
                Complex dot = 0.0;
                for (size_t i = 0; i < vlen; ++i) dot += std::conj(b[i]) * v[i];
                for (size_t i = 0; i < vlen; ++i) v[i] -= dot * b[i];
            }
        }
        double nr = 0.0;
        for (const Complex& z : v) nr += std::norm(z);
        nr = std::sqrt(nr);
        if (nr <= 1e-8 * n0) return false;
        for (Complex& z : v) z /= nr;
        basis.push_back(std::move(v));
        return true;
    };

    add(OperatorMatrix::identity(n));
    for (int len = 1; len <= max_len && static_cast<int>(basis.size()) < n * n; ++len) {
        // grow the whole subspace: every current basis element times every generator
        std::vector<OperatorMatrix> cur;
        cur.reserve(basis.size());
        for (const auto& b : basis) {
            OperatorMatrix m(n);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) m(r, c) = b[static_cast<size_t>(r) * n + c];
            cur.push_back(std::move(m));
        }
        bool grew = false;
        for (const auto& w : cur)
            for (const auto& g : generators)
                if (add(matmul(w, g))) grew = true;
        if (!grew) break;
    }
    return static_cast<int>(basis.size());
}

}  // namespace fuzzylab
