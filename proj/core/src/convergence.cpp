#include "fuzzylab/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fuzzylab {

double TruncatedFourier::norm() const {
    double s = 0.0;
    for (const Complex& z : c) s += std::norm(z);
    return std::sqrt(s);
}

double TruncatedFourier::max_coeff() const {
    double s = 0.0;
    for (const Complex& z : c) s = std::max(s, std::abs(z));
    return s;
}

double TruncatedFourier::sup_norm(int samples) const {
    double best = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double phi = 2.0 * std::numbers::pi * i / samples;
        Complex v = 0.0;
        for (int m = -N; m <= N; ++m) v += coeff(m) * std::polar(1.0, m * phi);
        best = std::max(best, std::abs(v));
    }
    return best;
}

TruncatedFourier TruncatedFourier::normalized() const {
    TruncatedFourier out = *this;
    const double n = norm();
    if (n > 0)
        for (Complex& z : out.c) z /= n;
    return out;
}

TruncatedFourier convolve(const TruncatedFourier& f, const TruncatedFourier& phi) {
    TruncatedFourier out(f.N + phi.N);
    for (int n = -out.N; n <= out.N; ++n) {
        Complex s = 0.0;
        for (int m = -phi.N; m <= phi.N; ++m) s += f.coeff(n - m) * phi.coeff(m);
        out.set(n, s);
    }
    return out;
}

double TruncatedSphFn::norm() const {
    double s = 0.0;
    for (const Complex& z : c) s += std::norm(z);
    return std::sqrt(s);
}

double TruncatedSphFn::max_coeff() const {
    double s = 0.0;
    for (const Complex& z : c) s = std::max(s, std::abs(z));
    return s;
}

std::vector<Complex> sample_on_grid(const TruncatedSphFn& f, const SphereGrid& grid) {
    std::vector<Complex> out(grid.size(), Complex(0.0, 0.0));
    for (int it = 0; it < grid.n_theta; ++it) {
        const double x = grid.cos_theta[it];
        for (int ip = 0; ip < grid.n_phi; ++ip) {
            const Complex e = std::polar(1.0, grid.phi[ip]);
            Complex v = 0.0;
            for (int l = 0; l <= f.L; ++l)
                for (int m = -l; m <= l; ++m) {
                    const Complex fc = f.coeff(l, m);
                    if (fc != Complex(0.0, 0.0)) v += fc * eval_Ylm_cs(l, m, x, e);
                }
            out[static_cast<size_t>(it) * grid.n_phi + ip] = v;
        }
    }
    return out;
}

double TruncatedSphFn::sup_norm(const SphereGrid& grid) const {
    const std::vector<Complex> s = sample_on_grid(*this, grid);
    double best = 0.0;
    for (const Complex& z : s) best = std::max(best, std::abs(z));
    return best;
}

TruncatedSphFn TruncatedSphFn::normalized() const {
    TruncatedSphFn out = *this;
    const double n = norm();
    if (n > 0)
        for (Complex& z : out.c) z /= n;
    return out;
}

TruncatedSphFn multiply_sph(const TruncatedSphFn& f, const TruncatedSphFn& g,
                            const SphereGrid& grid, int L_out) {
    const int needed = f.L + g.L;
    if (2 * grid.n_theta - 1 < 2 * needed || grid.n_phi <= 2 * needed)
        throw std::invalid_argument("multiply_sph: quadrature degree insufficient for 2*(deg f + deg g)");
    const std::vector<Complex> fs = sample_on_grid(f, grid);
    const std::vector<Complex> gs = sample_on_grid(g, grid);
    std::vector<Complex> prod(fs.size());
    for (size_t i = 0; i < fs.size(); ++i) prod[i] = fs[i] * gs[i];

    TruncatedSphFn out(L_out);
    for (int l = 0; l <= L_out; ++l)
        for (int m = -l; m <= l; ++m) {
            Complex s = 0.0;
            for (int it = 0; it < grid.n_theta; ++it) {
                const double x = grid.cos_theta[it];
                Complex row = 0.0;
                for (int ip = 0; ip < grid.n_phi; ++ip)
                    row += std::conj(eval_Ylm_cs(l, m, x, std::polar(1.0, grid.phi[ip]))) *
                           prod[static_cast<size_t>(it) * grid.n_phi + ip];
                s += grid.weight(it) * row;
            }
            out.set(l, m, s);
        }
    return out;
}

double KSchedule::k(int lambda) const {
    const double l = lambda;
    switch (kind) {
        case Kind::default_schedule:
            return l * l * (l + 1) * (l + 1);
        case Kind::prop_circle:
            return 2.0 * l * (l + 1) * (2 * l + 1) * (2 * l + 1);
        case Kind::prop_sphere:
            return std::pow(2.0, 3.0 * l + 3) * std::pow(l, l + 5.0) * (l + 1);
        case Kind::custom:
            return custom_fn(lambda);
    }
    return 0.0;
}

double KSchedule::proposition_floor(int lambda, bool circle) const {
    const double l = lambda;
    return circle ? 2.0 * l * (l + 1) * (2 * l + 1) * (2 * l + 1)
                  : std::pow(2.0, 3.0 * l + 3) * std::pow(l, l + 5.0) * (l + 1);
}

OperatorMatrix fhat_circle(const TruncatedFourier& f, const CircleModel& model) {
    const OperatorMatrix eta_p = model.xi_plus * std::sqrt(2.0);
    const OperatorMatrix eta_m = model.xi_minus * std::sqrt(2.0);
    OperatorMatrix out(model.dim);
    OperatorMatrix pw = OperatorMatrix::identity(model.dim);
    out += pw * f.coeff(0);
    const int hmax = std::min(f.N, 2 * model.lambda);
    OperatorMatrix pw_m = pw;
    for (int h = 1; h <= hmax; ++h) {
        pw = matmul(eta_p, pw);
        pw_m = matmul(eta_m, pw_m);
        out += pw * f.coeff(h);
        out += pw_m * f.coeff(-h);
    }
    return out;
}

namespace {

/// alpha_{m,n}: the weight eta^{n-m} picks up carrying u^m to u^n.
double circle_alpha(int m, int n, int lambda, double k) {
    if (std::abs(m) > lambda || std::abs(n) > lambda) return 0.0;
    double p = 1.0;
    for (int j = std::min(m, n); j < std::max(m, n); ++j) p *= std::sqrt(1.0 + j * (j + 1.0) / k);
    return p;
}

}  // namespace

TruncatedFourier apply_fhat_circle(const TruncatedFourier& f, const TruncatedFourier& phi,
                                   int lambda, double k) {
    TruncatedFourier out(lambda);
    for (int n = -lambda; n <= lambda; ++n) {
        Complex s = 0.0;
        for (int m = std::max(-lambda, n - 2 * lambda); m <= std::min(lambda, n + 2 * lambda); ++m) {
            const Complex fc = f.coeff(n - m);
            if (fc == Complex(0.0, 0.0)) continue;
            const Complex pc = phi.coeff(m);
            if (pc == Complex(0.0, 0.0)) continue;
            s += fc * pc * circle_alpha(m, n, lambda, k);
        }
        out.set(n, s);
    }
    return out;
}

namespace {

double circle_error(const TruncatedFourier& f, const TruncatedFourier& phi, int lambda, double k) {
    const TruncatedFourier conv = convolve(f, phi);
    const TruncatedFourier fuzz = apply_fhat_circle(f, phi, lambda, k);
    double err2 = 0.0;
    for (int n = -conv.N; n <= conv.N; ++n) err2 += std::norm(conv.coeff(n) - fuzz.coeff(n));
    return std::sqrt(err2);
}

double circle_bound(const TruncatedFourier& f, const TruncatedFourier& phi, int lambda) {
    const TruncatedFourier conv = convolve(f, phi);
    double tail = 0.0;
    for (int n = -conv.N; n <= conv.N; ++n)
        if (std::abs(n) > lambda) tail += std::norm(conv.coeff(n));
    double phi_tail = 0.0;
    for (int m = -phi.N; m <= phi.N; ++m)
        if (std::abs(m) > lambda) phi_tail += std::norm(phi.coeff(m));
    const double supf = f.sup_norm();
    const double F = f.max_coeff();
    const double Phi = phi.max_coeff();
    return tail + 2.0 * supf * supf * phi_tail + 2.0 * F * F * Phi * Phi / (2.0 * lambda + 1);
}

void require_consistent(int lambda, double k, bool circle, bool force) {
    const bool ok = circle ? (static_cast<double>(lambda) * lambda < 2.0 * std::sqrt(2.0 * k) - 2.0)
                           : (lambda * (lambda + 1.0) <= 2.0 * std::sqrt(2.0 * k));
    if (!ok && !force)
        throw std::invalid_argument("convergence sweep: model violates the cutoff consistency bound "
                                    "(pass force to override)");
}

}  // namespace

std::vector<DecayRow> strong_convergence_circle(const TruncatedFourier& f,
                                                const TruncatedFourier& phi, const KSchedule& sched,
                                                const std::vector<int>& lambdas, bool force) {
    std::vector<DecayRow> rows;
    rows.reserve(lambdas.size());
    for (int lambda : lambdas) {
        const double k = sched.k(lambda);
        require_consistent(lambda, k, true, force);
        DecayRow r;
        r.lambda = lambda;
        r.k = k;
        r.error = circle_error(f, phi, lambda, k);
        r.bound = std::sqrt(circle_bound(f, phi, lambda));
        r.within_bound = r.error <= r.bound + 1e-12;
        r.schedule_warning = k < sched.proposition_floor(lambda, true);
        rows.push_back(r);
    }
    return rows;
}

std::vector<DecayRow> strong_convergence_circle_product(const TruncatedFourier& f,
                                                        const TruncatedFourier& g,
                                                        const TruncatedFourier& phi,
                                                        const KSchedule& sched,
                                                        const std::vector<int>& lambdas, bool force) {
    std::vector<DecayRow> rows;
    rows.reserve(lambdas.size());
    const TruncatedFourier fg = convolve(f, g);
    for (int lambda : lambdas) {
        const double k = sched.k(lambda);
        require_consistent(lambda, k, true, force);
        // f^ g^ phi in coefficient space, then against the exact (fg) phi
        const TruncatedFourier gphi = apply_fhat_circle(g, phi, lambda, k);
        const TruncatedFourier fgphi_fuzzy = apply_fhat_circle(f, gphi, lambda, k);
        const TruncatedFourier fgphi = convolve(fg, phi);
        double err2 = 0.0;
        for (int n = -fgphi.N; n <= fgphi.N; ++n)
            err2 += std::norm(fgphi.coeff(n) - fgphi_fuzzy.coeff(n));
        DecayRow r;
        r.lambda = lambda;
        r.k = k;
        r.error = std::sqrt(err2);
        r.bound = std::sqrt(circle_bound(fg, phi, lambda)) +
                  3.0 * f.sup_norm() * std::sqrt(circle_bound(g, phi, lambda));
        r.within_bound = r.error <= r.bound + 1e-12;
        r.schedule_warning = k < sched.proposition_floor(lambda, true);
        rows.push_back(r);
    }
    return rows;
}

std::vector<NormBoundRow> uniform_norm_bound_circle(const TruncatedFourier& f,
                                                    const std::vector<int>& lambdas,
                                                    const KSchedule& sched) {
    std::vector<NormBoundRow> rows;
    rows.reserve(lambdas.size());
    const double supf = f.sup_norm();
    for (int lambda : lambdas) {
        const double k = sched.k(lambda);
        const CircleModel model = build_circle(lambda, k);
        NormBoundRow r;
        r.lambda = lambda;
        r.k = k;
        r.op_norm = operator_norm(fhat_circle(f, model));
        r.bound = 3.0 * supf;
        r.within_bound = r.op_norm <= r.bound + 1e-9;
        rows.push_back(r);
    }
    return rows;
}

OperatorMatrix fhat_sphere(const TruncatedSphFn& f, const SphereModel& model,
                           const FuzzyHarmonicSet& harmonics, bool* dropped) {
    OperatorMatrix out(model.dim);
    bool any_dropped = false;
    for (int l = 0; l <= f.L; ++l)
        for (int m = -l; m <= l; ++m) {
            const Complex fc = f.coeff(l, m);
            if (fc == Complex(0.0, 0.0)) continue;
            if (l > harmonics.l_max) {
                any_dropped = true;
                continue;
            }
            out += harmonics.at(l, m) * fc;
        }
    if (dropped) *dropped = any_dropped;
    return out;
}

namespace {

struct SphereCase {
    double error = 0.0;
    double bound = 0.0;
};

SphereCase sphere_error(const TruncatedSphFn& f, const TruncatedSphFn& phi, int lambda, double k,
                        const SphereGrid& grid) {
    const int l_out = f.L + phi.L;
    if (2 * grid.n_theta - 1 < 2 * l_out || grid.n_phi <= 2 * l_out)
        throw std::invalid_argument("strong_convergence_sphere: quadrature degree insufficient");

    const LadderTable ladders(lambda + 1);
    const SphereModel model = build_sphere(lambda, k, ladders);
    const FuzzyHarmonicSet harm = build_fuzzy_harmonics(model, std::min(f.L, 2 * lambda));
    const OperatorMatrix fh = fhat_sphere(f, model, harm);

    std::vector<Complex> phi_model(model.dim, Complex(0.0, 0.0));
    for (int l = 0; l <= std::min(lambda, phi.L); ++l)
        for (int m = -l; m <= l; ++m) phi_model[sphere_index(l, m)] = phi.coeff(l, m);
    const std::vector<Complex> fuzzy = fh.apply(phi_model);

    const TruncatedSphFn prod = multiply_sph(f, phi, grid, l_out);

    double err2 = 0.0, tail2 = 0.0;
    for (int l = 0; l <= l_out; ++l)
        for (int m = -l; m <= l; ++m) {
            const Complex exact = prod.coeff(l, m);
            const Complex fz = (l <= lambda) ? fuzzy[sphere_index(l, m)] : Complex(0.0, 0.0);
            err2 += std::norm(exact - fz);
            if (l > lambda) tail2 += std::norm(exact);
        }

    SphereCase out;
    out.error = std::sqrt(err2);
    const double fn = f.norm(), pn = phi.norm();
    out.bound = std::sqrt(fn * fn * pn * pn / (static_cast<double>(lambda) * lambda) + tail2);
    return out;
}

}  // namespace

std::vector<DecayRow> strong_convergence_sphere(const TruncatedSphFn& f, const TruncatedSphFn& phi,
                                                const KSchedule& sched,
                                                const std::vector<int>& lambdas,
                                                const SphereGrid& grid, bool force) {
    std::vector<DecayRow> rows;
    rows.reserve(lambdas.size());
    for (int lambda : lambdas) {
        const double k = sched.k(lambda);
        require_consistent(lambda, k, false, force);
        const SphereCase c = sphere_error(f, phi, lambda, k, grid);
        DecayRow r;
        r.lambda = lambda;
        r.k = k;
        r.error = c.error;
        r.bound = c.bound;
        r.within_bound = r.error <= r.bound + 1e-12;
        r.schedule_warning = k < sched.proposition_floor(lambda, false);
        rows.push_back(r);
    }
    return rows;
}

std::vector<DecayRow> strong_convergence_sphere_product(const TruncatedSphFn& f,
                                                        const TruncatedSphFn& g,
                                                        const TruncatedSphFn& phi,
                                                        const KSchedule& sched,
                                                        const std::vector<int>& lambdas,
                                                        const SphereGrid& grid, bool force) {
    std::vector<DecayRow> rows;
    rows.reserve(lambdas.size());
    const TruncatedSphFn fg = multiply_sph(f, g, grid, f.L + g.L);
    for (int lambda : lambdas) {
        const double k = sched.k(lambda);
        require_consistent(lambda, k, false, force);

        const LadderTable ladders(lambda + 1);
        const SphereModel model = build_sphere(lambda, k, ladders);
        const FuzzyHarmonicSet harm = build_fuzzy_harmonics(model);
        const OperatorMatrix fh = fhat_sphere(f, model, harm);
        const OperatorMatrix gh = fhat_sphere(g, model, harm);

        std::vector<Complex> phi_model(model.dim, Complex(0.0, 0.0));
        for (int l = 0; l <= std::min(lambda, phi.L); ++l)
            for (int m = -l; m <= l; ++m) phi_model[sphere_index(l, m)] = phi.coeff(l, m);
        const std::vector<Complex> fuzzy = fh.apply(gh.apply(phi_model));

        const int l_out = fg.L + phi.L;
        const TruncatedSphFn prod = multiply_sph(fg, phi, grid, l_out);
        double err2 = 0.0, tail2 = 0.0;
        for (int l = 0; l <= l_out; ++l)
            for (int m = -l; m <= l; ++m) {
                const Complex exact = prod.coeff(l, m);
                const Complex fz = (l <= lambda) ? fuzzy[sphere_index(l, m)] : Complex(0.0, 0.0);
                err2 += std::norm(exact - fz);
                if (l > lambda) tail2 += std::norm(exact);
            }

        const SphereCase cg = sphere_error(g, phi, lambda, k, grid);
        const double fnorm_bound = f.norm() + 2.0 * f.sup_norm(grid);
        DecayRow r;
        r.lambda = lambda;
        r.k = k;
        r.error = std::sqrt(err2);
        const double fgn = fg.norm(), pn = phi.norm();
        r.bound = std::sqrt(fgn * fgn * pn * pn / (static_cast<double>(lambda) * lambda) + tail2) +
                  fnorm_bound * cg.bound;
        r.within_bound = r.error <= r.bound + 1e-12;
        r.schedule_warning = k < sched.proposition_floor(lambda, false);
        rows.push_back(r);
    }
    return rows;
}

double circle_witness(int lambda, double k) {
    // ambient band |m| <= lambda+3 around the witness u^{lambda+1}
    const int band = lambda + 3;
    TruncatedFourier phi(band);
    phi.set(lambda + 1, 1.0);
    // u * phi: shift up; eta^+ annihilates everything outside H_lambda
    TruncatedFourier shifted(band + 1);
    for (int m = -band; m <= band; ++m) shifted.set(m + 1, phi.coeff(m));
    TruncatedFourier u(1);
    u.set(1, 1.0);
    const TruncatedFourier fuzzy = apply_fhat_circle(u, phi, lambda, k);
    double err2 = 0.0;
    for (int n = -(band + 1); n <= band + 1; ++n)
        err2 += std::norm(shifted.coeff(n) - fuzzy.coeff(n));
    return std::sqrt(err2);
}

SphereWitness sphere_witness_closed_form(int lambda) {
    // |B_{lambda+1}^{+,lambda+1}|^2 = (2 lambda + 4)/(2 (2 lambda + 5));
    // at (l, m) = (lambda+1, 0) the squares are (lambda+1)^2/((2l+1)(2l-1))
    // and (lambda+2)^2/((2l+1)(2l+3)) with l = lambda+1.
    const double L = lambda;
    SphereWitness w;
    w.x_pm = std::sqrt((2.0 * L + 4.0) / (2.0 * (2.0 * L + 5.0)));
    w.x_zero = std::sqrt((L + 1.0) * (L + 1.0) / ((2.0 * L + 3.0) * (2.0 * L + 1.0)) +
                         (L + 2.0) * (L + 2.0) / ((2.0 * L + 3.0) * (2.0 * L + 5.0)));
    return w;
}

SphereWitness sphere_witness(int lambda) {
    // apply t^a to Y_{lambda+1} in the ambient band; the model operator
    // annihilates everything above the cutoff, so the witness is the norm of
    // the classical image alone
    const LadderTable t(lambda + 3);
    SphereWitness w;
    {
        const int l = lambda + 1, m = lambda + 1;
        const double up = t.A(1, l, m);
        const double dn = t.B(1, l, m);
        w.x_pm = std::sqrt(up * up + dn * dn);
    }
    {
        const int l = lambda + 1, m = 0;
        const double up = t.A(0, l, m);
        const double dn = t.B(0, l, m);
        w.x_zero = std::sqrt(up * up + dn * dn);
    }
    return w;
}

}  // namespace fuzzylab
