#include "fuzzylab/sphere_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fuzzylab {

double epsilon3(int i, int j, int h) {
    if (i == j || j == h || i == h) return 0.0;
    return ((j - i + 3) % 3 == 1) ? 1.0 : -1.0;
}

namespace {

/// Builds the three spherical ladder operators with weights w_l on the
/// l -> l-1 couplings (and w_{l+1} on l -> l+1). Both xbar (w = c) and the
/// so(4) X (w = d) have this shape.
std::array<OperatorMatrix, 3> build_vector_operator(int lambda, const LadderTable& t,
                                                    const std::vector<double>& w) {
    const int dim = (lambda + 1) * (lambda + 1);
    std::array<OperatorMatrix, 3> out{OperatorMatrix(dim), OperatorMatrix(dim), OperatorMatrix(dim)};
    for (int a = -1; a <= 1; ++a) {
        OperatorMatrix& X = out[a + 1];
        for (int l = 0; l <= lambda; ++l)
            for (int m = -l; m <= l; ++m) {
                if (l >= 1 && std::abs(m + a) <= l - 1)
                    X(sphere_index(l - 1, m + a), sphere_index(l, m)) += w[l] * t.A(a, l, m);
                if (l + 1 <= lambda && std::abs(m + a) <= l + 1)
                    X(sphere_index(l + 1, m + a), sphere_index(l, m)) += w[l + 1] * t.B(a, l, m);
            }
    }
    return out;
}

std::array<OperatorMatrix, 3> to_cartesian(const std::array<OperatorMatrix, 3>& sph) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const OperatorMatrix& vm = sph[0];
    const OperatorMatrix& v0 = sph[1];
    const OperatorMatrix& vp = sph[2];
    std::array<OperatorMatrix, 3> cart;
    cart[0] = (vp + vm) * inv_sqrt2;
    cart[1] = (vp - vm) * Complex(0.0, -inv_sqrt2);
    cart[2] = v0;
    return cart;
}

}  // namespace

SphereModel build_sphere(int lambda, double k, const LadderTable& ladders) {
    if (lambda < 1) throw std::invalid_argument("build_sphere: lambda must be >= 1");
    if (!(k > 0)) throw std::invalid_argument("build_sphere: k must be positive");
    if (ladders.lambda_max() + 1 < lambda + 1)
        throw std::invalid_argument("build_sphere: ladder table too small for lambda");

    SphereModel m;
    m.lambda = lambda;
    m.k = k;
    m.dim = (lambda + 1) * (lambda + 1);
    m.consistency_ok = lambda * (lambda + 1.0) <= 2.0 * std::sqrt(2.0 * k);

    m.c.assign(lambda + 2, 0.0);
    for (int l = 1; l <= lambda; ++l) m.c[l] = std::sqrt(1.0 + static_cast<double>(l) * l / k);

    m.x_sph = build_vector_operator(lambda, ladders, m.c);
    m.x_cart = to_cartesian(m.x_sph);

    OperatorMatrix L0(m.dim), Lp(m.dim), Lm(m.dim);
    std::vector<double> h_diag(m.dim);
    for (int l = 0; l <= lambda; ++l)
        for (int mm = -l; mm <= l; ++mm) {
            L0(sphere_index(l, mm), sphere_index(l, mm)) = mm;
            h_diag[sphere_index(l, mm)] = l * (l + 1.0);
            if (mm + 1 <= l) Lp(sphere_index(l, mm + 1), sphere_index(l, mm)) = ladders.gamma(1, l, mm);
            if (mm - 1 >= -l) Lm(sphere_index(l, mm - 1), sphere_index(l, mm)) = ladders.gamma(-1, l, mm);
        }
    m.L_sph = {Lm, L0, Lp};
    m.L_cart = to_cartesian(m.L_sph);
    m.Hbar = OperatorMatrix::diagonal(h_diag);

    m.L2 = OperatorMatrix(m.dim);
    for (const auto& Li : m.L_cart) m.L2 += matmul(Li, Li);

    m.R2 = anticommutator(m.x_sph[2], m.x_sph[0]) + matmul(m.x_sph[1], m.x_sph[1]);

    m.proj_l.reserve(lambda + 1);
    for (int l = 0; l <= lambda; ++l) {
        OperatorMatrix p(m.dim);
        for (int mm = -l; mm <= l; ++mm) p(sphere_index(l, mm), sphere_index(l, mm)) = 1.0;
        m.proj_l.push_back(std::move(p));
    }
    return m;
}

SphereOperators operators_of(const SphereModel& m) {
    return {m.lambda, m.k, m.x_cart, m.L_cart, m.x_sph, m.L2, m.proj_l};
}

CheckReport verify_sphere_relations(const SphereOperators& ops) {
    const int lambda = ops.lambda;
    const double k = ops.k;
    const int dim = (lambda + 1) * (lambda + 1);
    const double tol = 1e-11 * dim;
    const OperatorMatrix id = OperatorMatrix::identity(dim);

    CheckReport rep;
    rep.suite = "sphere-identities";

    // normalized factors keep the residual relative; the raw product scale
    // grows like prod_l lambda(lambda+1)
    OperatorMatrix l2poly = id;
    for (int l = 0; l <= lambda; ++l) {
        OperatorMatrix f = ops.L2 - id * (l * (l + 1.0));
        f *= 1.0 / std::max(1.0, f.max_abs());
        l2poly = matmul(l2poly, f);
    }
    rep.add("rf3D3:L2-minimal", l2poly.max_abs(), tol);

    double worst = 0.0;
    for (int l = 0; l <= lambda; ++l) {
        OperatorMatrix p = ops.proj_l[l];
        for (int mm = -l; mm <= l; ++mm) {
            OperatorMatrix f = ops.L_cart[2] - id * static_cast<double>(mm);
            f *= 1.0 / std::max(1.0, f.max_abs());
            p = matmul(f, p);
        }
        worst = std::max(worst, p.max_abs());
    }
    rep.add("rf3D3:L3-minimal", worst, tol);

    const OperatorMatrix xp = ops.x_sph[2];
    const OperatorMatrix xm = ops.x_sph[0];
    rep.add("rf3D3:nilpotency",
            std::max(matrix_power(xp, 2 * lambda + 1).max_abs(),
                     matrix_power(xm, 2 * lambda + 1).max_abs()),
            tol);

    double vec = 0.0, rot = 0.0, herm = 0.0;
    for (int i = 0; i < 3; ++i) {
        herm = std::max(herm, (ops.x_cart[i] - ops.x_cart[i].adjoint()).max_abs());
        herm = std::max(herm, (ops.L_cart[i] - ops.L_cart[i].adjoint()).max_abs());
        for (int j = 0; j < 3; ++j) {
            OperatorMatrix cv = commutator(ops.L_cart[i], ops.x_cart[j]);
            OperatorMatrix cl = commutator(ops.L_cart[i], ops.L_cart[j]);
            for (int h = 0; h < 3; ++h) {
                const double e = epsilon3(i, j, h);
                if (e != 0.0) {
                    cv -= ops.x_cart[h] * Complex(0.0, e);
                    cl -= ops.L_cart[h] * Complex(0.0, e);
                }
            }
            vec = std::max(vec, cv.max_abs());
            rot = std::max(rot, cl.max_abs());
        }
    }
    rep.add("rf3D4:hermiticity", herm, tol);
    rep.add("rf3D4:vector-law", vec, tol);
    rep.add("rf3D4:so3", rot, tol);

    OperatorMatrix xl(dim);
    for (int i = 0; i < 3; ++i) xl += matmul(ops.x_cart[i], ops.L_cart[i]);
    rep.add("xx:transversality", xl.max_abs(), tol);

    const double kfac = 1.0 / k + (1.0 + lambda * lambda / k) / (2.0 * lambda + 1);
    const OperatorMatrix& ptop = ops.proj_l[lambda];
    double cworst = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            OperatorMatrix c = commutator(ops.x_cart[i], ops.x_cart[j]);
            for (int h = 0; h < 3; ++h) {
                const double e = epsilon3(i, j, h);
                if (e != 0.0)
                    c -= matmul(id * (-1.0 / k) + ptop * kfac, ops.L_cart[h]) * Complex(0.0, e);
            }
            cworst = std::max(cworst, c.max_abs());
        }
    rep.add("xx:commutator", cworst, tol);

    OperatorMatrix r2(dim);
    for (int i = 0; i < 3; ++i) r2 += matmul(ops.x_cart[i], ops.x_cart[i]);
    const OperatorMatrix r2form =
        id + (ops.L2 + id) * (1.0 / k) -
        ptop * ((1.0 + (lambda + 1.0) * (lambda + 1.0) / k) * (lambda + 1.0) / (2.0 * lambda + 1));
    rep.add("R^2D=3", (r2 - r2form).max_abs(), tol);

    return rep;
}

CheckReport verify_sphere_identities(const SphereModel& m) { return verify_sphere_relations(operators_of(m)); }

int sphere_generated_dimension(const SphereModel& m) {
    return word_span_dimension({m.x_sph[2], m.x_sph[0], m.x_sph[1]}, 4 * m.lambda + 4);
}

}  // namespace fuzzylab
