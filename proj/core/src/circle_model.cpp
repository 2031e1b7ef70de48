#include "fuzzylab/circle_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fuzzylab/text_format.hpp"

namespace fuzzylab {

double default_k_schedule(int lambda) {
    if (lambda < 1) throw std::invalid_argument("default_k_schedule: lambda must be >= 1");
    const double l = lambda;
    return l * l * (l + 1) * (l + 1);
}

CircleModel build_circle(int lambda, double k) {
    if (lambda < 1) throw std::invalid_argument("build_circle: lambda must be >= 1");
    if (!(k > 0)) throw std::invalid_argument("build_circle: k must be positive");

    CircleModel m;
    m.lambda = lambda;
    m.k = k;
    m.dim = 2 * lambda + 1;
    m.consistency_ok = static_cast<double>(lambda) * lambda < 2.0 * std::sqrt(2.0 * k) - 2.0;

    m.xi_plus = OperatorMatrix(m.dim);
    for (int mm = -lambda; mm < lambda; ++mm)
        m.xi_plus(mm + 1 + lambda, mm + lambda) =
            std::sqrt(1.0 + mm * (mm + 1.0) / k) / std::sqrt(2.0);
    m.xi_minus = m.xi_plus.adjoint();

    std::vector<double> diag(m.dim);
    for (int mm = -lambda; mm <= lambda; ++mm) diag[mm + lambda] = mm;
    m.Lbar = OperatorMatrix::diagonal(diag);
    m.Hbar = matmul(m.Lbar, m.Lbar);
    m.R2 = anticommutator(m.xi_plus, m.xi_minus);

    m.proj.reserve(m.dim);
    for (int i = 0; i < m.dim; ++i) {
        OperatorMatrix p(m.dim);
        p(i, i) = 1.0;
        m.proj.push_back(std::move(p));
    }
    return m;
}

CircleOperators operators_of(const CircleModel& m) {
    return {m.lambda, m.k, m.xi_plus, m.xi_minus, m.Lbar, m.proj};
}

CheckReport verify_circle_relations(const CircleOperators& ops) {
    const int lambda = ops.lambda;
    const double k = ops.k;
    const int dim = 2 * lambda + 1;
    const double tol = 1e-12 * dim;
    const OperatorMatrix id = OperatorMatrix::identity(dim);

    CheckReport rep;
    rep.suite = "circle-identities";

    const double nil = std::max(matrix_power(ops.xi_plus, dim).max_abs(),
                                matrix_power(ops.xi_minus, dim).max_abs());
    rep.add("nilpotency", nil, tol);

    // factors are normalized so the residual is relative to the product's
    // own scale (the raw product grows like (2 lambda)^(2 lambda + 1))
    OperatorMatrix minpoly = id;
    for (int mm = -lambda; mm <= lambda; ++mm) {
        OperatorMatrix f = ops.Lbar - static_cast<double>(mm) * id;
        f *= 1.0 / std::max(1.0, f.max_abs());
        minpoly = matmul(minpoly, f);
    }
    rep.add("minimal-polynomial", minpoly.max_abs(), tol);

    const double grad = std::max((commutator(ops.Lbar, ops.xi_plus) - ops.xi_plus).max_abs(),
                                 (commutator(ops.Lbar, ops.xi_minus) + ops.xi_minus).max_abs());
    rep.add("grading", grad, tol);

    const double mu = 1.0 + lambda * (lambda + 1.0) / k;
    const OperatorMatrix& ptop = ops.proj[2 * lambda];
    const OperatorMatrix& pbot = ops.proj[0];
    const OperatorMatrix comrel = commutator(ops.xi_plus, ops.xi_minus) + ops.Lbar * (1.0 / k) -
                                  (ptop - pbot) * (mu / 2.0);
    rep.add("comrelD=2", comrel.max_abs(), tol);

    const OperatorMatrix r2 = anticommutator(ops.xi_plus, ops.xi_minus);
    const OperatorMatrix r2form =
        id + matmul(ops.Lbar, ops.Lbar) * (1.0 / k) - (ptop + pbot) * (mu / 2.0);
    rep.add("R^2D=2", (r2 - r2form).max_abs(), tol);

    // every projector as a Lagrange polynomial in Lbar
    std::vector<double> nodes(dim);
    for (int mm = -lambda; mm <= lambda; ++mm) nodes[mm + lambda] = mm;
    double worst = 0.0;
    for (int i = 0; i < dim; ++i) {
        const OperatorMatrix p = matrix_polynomial(ops.Lbar, lagrange_projector_coeffs(nodes, i));
        worst = std::max(worst, (p - ops.proj[i]).max_abs());
    }
    rep.add("projector-polynomial", worst, tol);

    return rep;
}

CheckReport verify_circle_identities(const CircleModel& m) { return verify_circle_relations(operators_of(m)); }

So3Realization build_so3_realization(const CircleModel& m) {
    const int lambda = m.lambda;
    const double k = m.k;
    const double casimir = lambda * (lambda + 1.0);
    const int dim = m.dim;

    So3Realization r;
    r.lambda = lambda;
    r.k = k;
    r.E0 = m.Lbar;
    r.E_plus = OperatorMatrix(dim);
    for (int mm = -lambda; mm < lambda; ++mm)
        r.E_plus(mm + 1 + lambda, mm + lambda) =
            std::sqrt((casimir - mm * (mm + 1.0)) / 2.0);
    r.E_minus = r.E_plus.adjoint();

    // The conventional extra 1/sqrt(2) on f_± belongs to the ladder matrix
    // elements; with E^± obeying [E+,E-]=E0 it must be dropped so that
    // xi^± = f_±(E0)E^± and C = lambda(lambda+1) hold at once.
    r.f_plus = [casimir, k](double s) {
        return std::sqrt((1.0 + s * (s - 1.0) / k) / (casimir - s * (s - 1.0)));
    };
    r.f_minus = [f = r.f_plus](double s) { return f(s + 1.0); };
    r.f_u = [casimir](double s) { return std::sqrt(2.0 / (casimir - s * (s - 1.0))); };

    CheckReport rep;
    rep.suite = "so3-realization";
    const double tol = 1e-12 * dim;
    const OperatorMatrix id = OperatorMatrix::identity(dim);

    rep.add("su2rel",
            std::max((commutator(r.E_plus, r.E_minus) - r.E0).max_abs(),
                     std::max((commutator(r.E0, r.E_plus) - r.E_plus).max_abs(),
                              (commutator(r.E0, r.E_minus) + r.E_minus).max_abs())),
            tol);

    const OperatorMatrix cas =
        matmul(r.E_plus, r.E_minus) * 2.0 + matmul(r.E0, r.E0 - id);
    rep.add("casimirsu2", (cas - id * casimir).max_abs(), tol);

    // xi^± = f_±(E0) E^± with the f factor applied after the ladder: the
    // diagonal function acts on the row (target) m-value, so the singular
    // boundary arguments are never evaluated.
    auto apply_left = [dim](const std::function<double(double)>& f, const OperatorMatrix& ladder,
                            int lambda_) {
        OperatorMatrix out(dim);
        for (int rr = 0; rr < dim; ++rr)
            for (int cc = 0; cc < dim; ++cc)
                if (ladder(rr, cc) != Complex(0.0, 0.0))
                    out(rr, cc) = f(rr - lambda_) * ladder(rr, cc);
        return out;
    };
    const OperatorMatrix xi_p = apply_left(r.f_plus, r.E_plus, lambda);
    const OperatorMatrix xi_m = apply_left(r.f_minus, r.E_minus, lambda);
    rep.add("transfD2", std::max((xi_p - m.xi_plus).max_abs(), (xi_m - m.xi_minus).max_abs()), tol);

    const OperatorMatrix e_p = apply_left([&](double s) { return 1.0 / r.f_plus(s); }, m.xi_plus, lambda);
    const OperatorMatrix e_m = apply_left([&](double s) { return 1.0 / r.f_minus(s); }, m.xi_minus, lambda);
    rep.add("transfD2-inverse",
            std::max((e_p - r.E_plus).max_abs(), (e_m - r.E_minus).max_abs()), tol);

    // 2 xi- xi+ f_+(Lbar+1)^{-2} == lambda(lambda+1) - Lbar(Lbar+1); the
    // inverse square is evaluated as a rational so the boundary zero of
    // 2 xi- xi+ meets a zero, not a pole.
    std::vector<double> finv2(dim);
    for (int mm = -lambda; mm <= lambda; ++mm) {
        const double s = mm + 1.0;
        finv2[mm + lambda] = (casimir - s * (s - 1.0)) / (1.0 + s * (s - 1.0) / k);
    }
    const OperatorMatrix lhs = matmul(matmul(m.xi_minus, m.xi_plus), OperatorMatrix::diagonal(finv2)) * 2.0;
    const OperatorMatrix rhs = id * casimir - matmul(m.Lbar, m.Lbar + id);
    rep.add("casimirsu2'", (lhs - rhs).max_abs(), tol);

    r.report = std::move(rep);
    return r;
}

CircleOperators o2_transform(const CircleModel& m, O2Kind kind, double theta) {
    OperatorMatrix u(m.dim);
    if (kind == O2Kind::rotation) {
        std::vector<Complex> d(m.dim);
        for (int mm = -m.lambda; mm <= m.lambda; ++mm)
            d[mm + m.lambda] = std::polar(1.0, theta * mm);
        u = OperatorMatrix::diagonal(d);
    } else {
        const So3Realization r = build_so3_realization(m);
        const OperatorMatrix e1 = (r.E_plus + r.E_minus) * (1.0 / std::sqrt(2.0));
        u = exp_i_hermitian(e1, 3.14159265358979323846);
    }
    const OperatorMatrix uh = u.adjoint();
    auto conj = [&](const OperatorMatrix& a) { return matmul(matmul(u, a), uh); };

    CircleOperators out;
    out.lambda = m.lambda;
    out.k = m.k;
    out.xi_plus = conj(m.xi_plus);
    out.xi_minus = conj(m.xi_minus);
    out.Lbar = conj(m.Lbar);
    out.proj.reserve(m.proj.size());
    // conjugated projectors keep their eigenvalue label: the transformed
    // Lbar acts on U psi_m with the original eigenvalue m
    for (const auto& p : m.proj) out.proj.push_back(conj(p));
    return out;
}

ProjectedDerivatives projected_derivatives(const CircleModel& m) {
    const int lambda = m.lambda;
    const double k = m.k;
    const double sq2k = std::sqrt(2.0 * k);
    const double b = -0.5 + 3.0 / (8.0 * sq2k) + 63.0 / (128.0 * k);
    auto series = [&](double mm) {
        return (b + mm - 3.0 * mm / (4.0 * sq2k) -
                (mm * mm * mm - 1.5 * mm * mm + (79.0 / 32.0) * mm) / (2.0 * k)) /
               std::sqrt(2.0);
    };

    ProjectedDerivatives d;
    d.d_plus = OperatorMatrix(m.dim);
    for (int mm = -lambda + 1; mm <= lambda; ++mm)
        d.d_plus(mm - 1 + lambda, mm + lambda) = series(mm);
    d.d_minus = OperatorMatrix(m.dim);
    for (int mm = -lambda; mm <= lambda - 1; ++mm)
        d.d_minus(mm + 1 + lambda, mm + lambda) = series(mm + 1.0);
    d.commutator_pm = commutator(d.d_plus, d.d_minus);
    d.anticommutator_pm = anticommutator(d.d_plus, d.d_minus);
    return d;
}

int circle_generated_dimension(const CircleModel& m) {
    return word_span_dimension({m.xi_plus, m.xi_minus}, 4 * m.lambda);
}

std::string operator_to_csv(const OperatorMatrix& op) {
    std::string out = "row,col,re,im\n";
    for (int r = 0; r < op.dim(); ++r)
        for (int c = 0; c < op.dim(); ++c)
            out += std::to_string(r) + "," + std::to_string(c) + "," + fmt17(op(r, c).real()) +
                   "," + fmt17(op(r, c).imag()) + "\n";
    return out;
}

}  // namespace fuzzylab
