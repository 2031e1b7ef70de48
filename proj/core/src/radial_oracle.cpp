#include "fuzzylab/radial_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace fuzzylab {

namespace {

double binomial(int n, int j) {
    double r = 1.0;
    for (int i = 0; i < j; ++i) r = r * (n - i) / (i + 1);
    return r;
}

double double_factorial_odd(int n) {  // (2h-1)!! with n = 2h-1, (-1)!! = 1
    double r = 1.0;
    for (int i = n; i > 1; i -= 2) r *= i;
    return r;
}

}  // namespace

double Polynomial::eval(double x) const {
    double v = 0.0;
    for (size_t i = c.size(); i-- > 0;) v = v * x + c[i];
    return v;
}

Polynomial Polynomial::derivative() const {
    Polynomial d;
    if (c.size() <= 1) return d;
    d.c.resize(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) d.c[i - 1] = c[i] * static_cast<double>(i);
    return d;
}

double gaussian_moment_reduced(double a, double b, int n) {
    if (!(a > 0)) throw std::invalid_argument("gaussian_moment: a must be positive");
    if (n < 0) throw std::invalid_argument("gaussian_moment: n must be >= 0");
    double s = 0.0;
    for (int h = 0; 2 * h <= n; ++h)
        s += binomial(n, 2 * h) * std::pow(b / (2.0 * a), n - 2 * h) *
             double_factorial_odd(2 * h - 1) / std::pow(2.0 * a, h);
    return s;
}

double gaussian_moment(double a, double b, int n) {
    return std::exp(b * b / (4.0 * a)) * std::sqrt(std::numbers::pi / a) *
           gaussian_moment_reduced(a, b, n);
}

namespace {

/// Bisection to a sign change, then Newton polish with a secant derivative.
double solve_bracketed(const std::function<double(double)>& f, double lo, double hi, double tol) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0.0) throw std::invalid_argument("solve_bracketed: no root in bracket");
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0 || hi - lo < tol * std::max(1.0, std::abs(mid))) return mid;
        if (flo * fm < 0.0) {
            hi = mid;
            fhi = fm;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double solve_V0(double k) {
    const double s = std::sqrt(1.0 / (2.0 * k));
    auto f = [&](double v) { return -s * v - s * s * s * v * v - std::pow(1.0 + v / k, 1.5); };
    const double lo = -2.0 * std::sqrt(2.0 * k);
    if (f(lo) * f(0.0) > 0.0)
        throw std::invalid_argument("solve_V0: no root in [-2 sqrt(2k), 0]; k too small");
    return solve_bracketed(f, lo, 0.0, 1e-15);
}

EnergySolveResult solve_Em(double k, int m, int n) {
    auto g = [&](double e) {
        return e * e / (2.0 * (k - e)) + e - static_cast<double>(m) * m -
               (2.0 * n + 1) * std::sqrt(2.0 * (k - e));
    };
    EnergySolveResult res;
    const double ep = solve_bracketed(g, 0.0, 0.995 * k, 1e-15);
    res.E_prime = ep;
    res.residual = std::abs(g(ep));
    res.E = ep + solve_V0(k);
    res.physical = res.residual <= 1e-10 * std::sqrt(k) * std::max(1.0, 2.0 * n + 1.0);
    return res;
}

GaussianProfile circle_profile(double k, int m) {
    const double ep = solve_Em(k, m, 0).E_prime;
    const double km = 2.0 * (k - ep);
    return {ep / km, std::sqrt(km), 0};
}

GaussianProfile sphere_profile(double k, int l) {
    const double kl = 2.0 * k + 3.0 * l * (l + 1.0);
    return {(2.0 * k + 4.0 * l * (l + 1.0)) / kl, std::sqrt(kl), 0};
}

RadialGrid default_radial_grid(int D, double k, int angular) {
    const GaussianProfile p = (D == 2) ? circle_profile(k, angular) : sphere_profile(k, angular);
    const double sigma = 1.0 / std::sqrt(p.stiffness);
    double lo = p.center - 12.0 * sigma;
    const double hi = p.center + 12.0 * sigma;
    if (D == 3) lo = std::max(0.02, lo);
    const int n = static_cast<int>(std::ceil((hi - lo) / (sigma / 160.0)));
    return {lo, hi, n};
}

std::vector<double> tridiagonal_lowest(const std::vector<double>& diag,
                                       const std::vector<double>& off, int n_levels) {
    const int n = static_cast<int>(diag.size());
    if (n_levels < 1 || n_levels > n) throw std::invalid_argument("tridiagonal_lowest: bad n_levels");
    if (static_cast<int>(off.size()) != n - 1)
        throw std::invalid_argument("tridiagonal_lowest: off size must be n-1");

    double lo = diag[0], hi = diag[0];
    for (int i = 0; i < n; ++i) {
        const double r = (i > 0 ? std::abs(off[i - 1]) : 0.0) + (i < n - 1 ? std::abs(off[i]) : 0.0);
        lo = std::min(lo, diag[i] - r);
        hi = std::max(hi, diag[i] + r);
    }

    auto count_below = [&](double x) {
        int cnt = 0;
        double d = 1.0;
        for (int i = 0; i < n; ++i) {
            const double off2 = (i > 0) ? off[i - 1] * off[i - 1] : 0.0;
            d = diag[i] - x - off2 / d;
            if (d == 0.0) d = 1e-300;
            if (d < 0.0) ++cnt;
        }
        return cnt;
    };

    std::vector<double> out(n_levels);
    for (int j = 0; j < n_levels; ++j) {
        double a = lo, b = hi;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (a + b);
            if (count_below(mid) >= j + 1)
                b = mid;
            else
                a = mid;
            if (b - a <= 1e-14 * std::max({1.0, std::abs(a), std::abs(b)})) break;
        }
        out[j] = 0.5 * (a + b);
    }
    return out;
}

namespace {

std::vector<double> fd_levels_once(int D, double k, int angular, int n_levels, double lo, double hi,
                                   int n, double V0) {
    const double h = (hi - lo) / n;
    const int nn = n - 1;  // interior nodes
    std::vector<double> diag(nn), off(nn - 1, -1.0 / (h * h));
    if (D == 3) {
        for (int i = 0; i < nn; ++i) {
            const double r = lo + h * (i + 1);
            diag[i] = 2.0 / (h * h) + V0 + 2.0 * k * (r - 1.0) * (r - 1.0) +
                      angular * (angular + 1.0) / (r * r);
        }
        return tridiagonal_lowest(diag, off, n_levels);
    }
    // D = 2: -f'' + [e^{2rho} V(e^rho) + m^2] f = E e^{2rho} f, symmetrized
    // by the half-power of the weight so the matrix stays tridiagonal.
    std::vector<double> w(nn);
    for (int i = 0; i < nn; ++i) {
        const double rho = lo + h * (i + 1);
        const double er = std::exp(rho);
        w[i] = std::exp(2.0 * rho);
        const double q = w[i] * (V0 + 2.0 * k * (er - 1.0) * (er - 1.0)) +
                         static_cast<double>(angular) * angular;
        diag[i] = (2.0 / (h * h) + q) / w[i];
    }
    for (int i = 0; i + 1 < nn; ++i) off[i] = (-1.0 / (h * h)) / std::sqrt(w[i] * w[i + 1]);
    return tridiagonal_lowest(diag, off, n_levels);
}

}  // namespace

std::vector<double> fd_spectrum(int D, double k, int angular, int n_levels, const RadialGrid& grid) {
    if (D != 2 && D != 3) throw std::invalid_argument("fd_spectrum: D must be 2 or 3");
    if (angular < 0) throw std::invalid_argument("fd_spectrum: angular must be >= 0");
    const GaussianProfile p = (D == 2) ? circle_profile(k, angular) : sphere_profile(k, angular);
    const double sigma = 1.0 / std::sqrt(p.stiffness);
    if (sigma / grid.spacing() < 40.0)
        throw std::invalid_argument("fd_spectrum: grid under-resolved (need >= 40 points per oscillator length)");
    const double V0 = (D == 2) ? solve_V0(k) : -std::sqrt(2.0 * k);
    const std::vector<double> coarse =
        fd_levels_once(D, k, angular, n_levels, grid.r_min, grid.r_max, grid.n_points, V0);
    const std::vector<double> fine =
        fd_levels_once(D, k, angular, n_levels, grid.r_min, grid.r_max, 2 * grid.n_points, V0);
    std::vector<double> out(n_levels);
    for (int i = 0; i < n_levels; ++i) out[i] = (4.0 * fine[i] - coarse[i]) / 3.0;
    return out;
}

namespace {

struct TwoGaussians {
    double P, Q;    // sqrt(k_m), sqrt(k_m')
    double u, v;    // centers
    double a;       // (P+Q)/2
    double prefactor;  // N N' (angular factor) sqrt(pi/a), cancellation-free
};

/// Shared element machinery: integrates poly * e^{b0 rho} against the
/// normalized product of the two profiles. The exponent b^2/4a - S is
/// expanded so no large cancelling terms appear.
double element_from_moments(const TwoGaussians& g, const Polynomial& poly, double b0) {
    const double b = b0 + g.P * g.u + g.Q * g.v;
    const double delta = b0 * b0 / (4.0 * g.a) + b0 * (g.P * g.u + g.Q * g.v) / (2.0 * g.a) -
                         g.P * g.Q * (g.u - g.v) * (g.u - g.v) / (2.0 * (g.P + g.Q));
    double total = 0.0;
    for (size_t j = 0; j < poly.c.size(); ++j)
        if (poly.c[j] != 0.0)
            total += poly.c[j] * gaussian_moment_reduced(g.a, b, static_cast<int>(j));
    return g.prefactor * std::exp(delta) * total;
}

TwoGaussians circle_pair(double k, int m, int mprime) {
    const GaussianProfile pm = circle_profile(k, m);
    const GaussianProfile pp = circle_profile(k, mprime);
    TwoGaussians g;
    g.P = pm.stiffness;
    g.Q = pp.stiffness;
    g.u = pm.center;
    g.v = pp.center;
    g.a = 0.5 * (g.P + g.Q);
    // 2 pi N_m N_m' sqrt(pi/a) = sqrt(2/(x + 1/x)) e^{-1/2P - 1/2Q - u - v}
    const double x = std::sqrt(std::sqrt(g.P / g.Q));
    g.prefactor = std::sqrt(2.0 / (x + 1.0 / x)) *
                  std::exp(-0.5 / g.P - 0.5 / g.Q - g.u - g.v);
    return g;
}

TwoGaussians sphere_pair(double k, int l, int L) {
    const GaussianProfile pl = sphere_profile(k, l);
    const GaussianProfile pL = sphere_profile(k, L);
    TwoGaussians g;
    g.P = pl.stiffness;
    g.Q = pL.stiffness;
    g.u = pl.center;
    g.v = pL.center;
    g.a = 0.5 * (g.P + g.Q);
    const double x = std::sqrt(std::sqrt(g.P / g.Q));
    g.prefactor = std::sqrt(2.0 / (x + 1.0 / x));  // N_l N_L sqrt(pi/a)
    return g;
}

/// exp(D^2 / 4c) applied to poly * e^{n rho} at rho0, series through 1/k:
/// n-th term carries (4c)^{-n}, c ~ sqrt(2k), so two derivative orders.
double heat_series(const Polynomial& poly, int n_exp, double c, double rho0) {
    Polynomial f = poly;
    double total = 0.0;
    double fact = 1.0;
    for (int n = 0; n <= 2; ++n) {
        if (n > 0) {
            // (poly e^{n_exp rho})'' = (poly'' + 2 n_exp poly' + n_exp^2 poly) e^{...}
            Polynomial d1 = f.derivative();
            Polynomial d2 = d1.derivative();
            Polynomial next;
            next.c.assign(std::max({d2.c.size(), d1.c.size(), f.c.size()}), 0.0);
            for (size_t i = 0; i < d2.c.size(); ++i) next.c[i] += d2.c[i];
            for (size_t i = 0; i < d1.c.size(); ++i) next.c[i] += 2.0 * n_exp * d1.c[i];
            for (size_t i = 0; i < f.c.size(); ++i) next.c[i] += n_exp * n_exp * f.c[i];
            f = next;
            fact *= n;
        }
        total += f.eval(rho0) * std::exp(n_exp * rho0) / (fact * std::pow(4.0 * c, n));
    }
    return total;
}

}  // namespace

ElementResult circle_matrix_element(const Polynomial& poly, int n_exp, int h, int m, int mprime,
                                    double k, bool volume) {
    ElementResult res;
    if (mprime - m != h) return {0.0, 0.0, true};  // zero by grading

    if (volume) {
        const TwoGaussians g = circle_pair(k, m, mprime);
        res.exact = element_from_moments(g, poly, 2.0 + n_exp);

        // truncated asymptotics: K = 1, leading expansions of c and rho
        const double sq2k = std::sqrt(2.0 * k);
        const double c_tr =
            sq2k * (1.0 - 1.0 / sq2k +
                    (3.0 - static_cast<double>(m) * m - static_cast<double>(mprime) * mprime) /
                        (4.0 * k));
        const double rho_tr =
            2.0 / sq2k + (static_cast<double>(m) * m + static_cast<double>(mprime) * mprime + 2.0) /
                             (4.0 * k);
        res.asym = heat_series(poly, n_exp, c_tr, rho_tr);
        return res;
    }

    // auxiliary flat measure: overlap of the raw oscillator profiles
    // normalized in d rho; only the exact route applies.
    const GaussianProfile pm = circle_profile(k, m);
    const GaussianProfile pp = circle_profile(k, mprime);
    const double P = pm.stiffness, Q = pp.stiffness;
    const double u = pm.center, v = pp.center;
    const double a = 0.5 * (P + Q);
    const double b0 = n_exp;
    const double b = b0 + P * u + Q * v;
    const double delta = b0 * b0 / (4.0 * a) + b0 * (P * u + Q * v) / (2.0 * a) -
                         P * Q * (u - v) * (u - v) / (2.0 * (P + Q));
    double total = 0.0;
    for (size_t j = 0; j < poly.c.size(); ++j)
        if (poly.c[j] != 0.0)
            total += poly.c[j] * gaussian_moment_reduced(a, b, static_cast<int>(j));
    // norms integrate to sqrt(pi/P), sqrt(pi/Q)
    res.exact = std::exp(delta) * std::pow(P * Q, 0.25) / std::sqrt(a) * total;
    res.asym = 0.0;
    res.has_asym = false;
    return res;
}

double circle_K_factor(double k, int m, int mprime) {
    const GaussianProfile pm = circle_profile(k, m);
    const GaussianProfile pp = circle_profile(k, mprime);
    const double P = pm.stiffness, Q = pp.stiffness;
    const double x = std::sqrt(std::sqrt(P / Q));
    const double d = pm.center + 1.0 / P - pp.center - 1.0 / Q;
    return std::sqrt(2.0 / (x + 1.0 / x)) * std::exp(-(P * Q) / (2.0 * (P + Q)) * d * d);
}

ElementResult circle_derivative_element(double k, int m) {
    const GaussianProfile p = circle_profile(k, m);
    // d_+ psi_m = e^{-rho-i phi}/sqrt(2) [m - (rho - rho~_m) sqrt(k_m)] psi_m
    Polynomial f;
    f.c = {(m + p.center * p.stiffness) / std::sqrt(2.0), -p.stiffness / std::sqrt(2.0)};
    ElementResult res = circle_matrix_element(f, -1, -1, m, m - 1, k);
    // series through 1/k, with the tail coefficients the exact integral
    // fixes (-47 m/32 + 31/64, not -79 m/32 + 63/64)
    const double sq2k = std::sqrt(2.0 * k);
    const double mm = m;
    res.asym = ((mm - 0.5) + (3.0 / 8.0 - 3.0 * mm / 4.0) / sq2k +
                (-mm * mm * mm + 1.5 * mm * mm - (47.0 / 32.0) * mm + 31.0 / 64.0) / (2.0 * k)) /
               std::sqrt(2.0);
    return res;
}

ElementResult sphere_radial_integral(const Polynomial& g, int l, int L, double k) {
    if (std::abs(l - L) > 1) throw std::invalid_argument("sphere_radial_integral: need |l-L| <= 1");
    const TwoGaussians pair = sphere_pair(k, l, L);
    ElementResult res;
    res.exact = element_from_moments(pair, g, 0.0);

    // (general): e^{-[l(l+1)-L(L+1)]^2/(4 (2k)^{3/2})} sum_n g^{(2n)}(r^)/((2n)!! (P+Q)^n)
    const double num = (l * (l + 1.0) + L * (L + 1.0)) / (4.0 * k);
    const double rhat =
        1.0 + num -
        (0.75 * l * (l + 1.0) * L * (L + 1.0) +
         1.125 * (static_cast<double>(l) * l * (l + 1.0) * (l + 1.0) +
                  static_cast<double>(L) * L * (L + 1.0) * (L + 1.0))) /
            (4.0 * k * k);
    const double diff = l * (l + 1.0) - L * (L + 1.0);
    const double pre = std::exp(-diff * diff / (4.0 * std::pow(2.0 * k, 1.5)));
    double series = g.eval(rhat);
    Polynomial d2 = g.derivative().derivative();
    if (!d2.c.empty()) series += d2.eval(rhat) / (2.0 * (pair.P + pair.Q));
    Polynomial d4 = d2.derivative().derivative();
    if (!d4.c.empty()) series += d4.eval(rhat) / (8.0 * (pair.P + pair.Q) * (pair.P + pair.Q));
    res.asym = pre * series;
    return res;
}

namespace {

struct RecipCtx {
    double a, c;
};

double recip_integrand(double r, const void* ctx) {
    const auto* rc = static_cast<const RecipCtx*>(ctx);
    return std::exp(-rc->a * (r - rc->c) * (r - rc->c)) / r;
}

}  // namespace

ElementResult sphere_radial_integral_inverse_r(int l, int L, double k) {
    if (std::abs(l - L) > 1)
        throw std::invalid_argument("sphere_radial_integral_inverse_r: need |l-L| <= 1");
    const TwoGaussians pair = sphere_pair(k, l, L);
    const double c = (pair.P * pair.u + pair.Q * pair.v) / (pair.P + pair.Q);
    const double s = 1.0 / std::sqrt(pair.a);
    RecipCtx ctx{pair.a, c};
    const double lo = std::max(1e-9, c - 14.0 * s);
    const double hi = c + 14.0 * s;
    const double integral =
        adaptive_quadrature({lo, c - 2.0 * s, c + 2.0 * s, hi}, recip_integrand, &ctx, 1e-13);
    const double delta = -pair.P * pair.Q * (pair.u - pair.v) * (pair.u - pair.v) /
                         (2.0 * (pair.P + pair.Q));
    ElementResult res;
    res.exact = pair.prefactor * std::exp(delta) * integral * std::sqrt(pair.a / std::numbers::pi);

    // series route with g = 1/r: g'' = 2/r^3, g'''' = 24/r^5
    const double num = (l * (l + 1.0) + L * (L + 1.0)) / (4.0 * k);
    const double rhat = 1.0 + num;
    const double diff = l * (l + 1.0) - L * (L + 1.0);
    const double pre = std::exp(-diff * diff / (4.0 * std::pow(2.0 * k, 1.5)));
    const double pq = pair.P + pair.Q;
    res.asym = pre * (1.0 / rhat + (2.0 / std::pow(rhat, 3)) / (2.0 * pq) +
                      (24.0 / std::pow(rhat, 5)) / (8.0 * pq * pq));
    return res;
}

ElementResult sphere_deriv_integral(int l, double k) {
    if (l < 1) throw std::invalid_argument("sphere_deriv_integral: l must be >= 1");
    // int f_l f'_{l-1} dr; f'_{l-1} = -(r - r~_{l-1}) sqrt(k_{l-1}) f_{l-1}
    const GaussianProfile pm1 = sphere_profile(k, l - 1);
    Polynomial g;
    g.c = {pm1.center * pm1.stiffness, -pm1.stiffness};
    ElementResult res = sphere_radial_integral(g, l, l - 1, k);
    const double sq2k = std::sqrt(2.0 * k);
    res.asym = -l / sq2k + 18.0 * l * l * l / (8.0 * k * sq2k);
    return res;
}

TailShift tail_shift_bound(double a, double b) {
    if (!(a > 0) || !(b > 0)) throw std::invalid_argument("tail_shift_bound: need a > 0, b > 0");
    // exact = e^{-a b^2} int_0^inf e^{-a r^2 - 2ab r} dr, integral taken with
    // the overflow-free reduced integrand
    struct Ctx {
        double a, b;
    } ctx{a, b};
    auto f = [](double r, const void* c) {
        const auto* t = static_cast<const Ctx*>(c);
        return std::exp(-t->a * r * r - 2.0 * t->a * t->b * r);
    };
    const double span = 12.0 / std::sqrt(a);
    const double reduced =
        adaptive_quadrature({0.0, span / 8.0, span}, f, &ctx, 1e-13);
    TailShift out;
    out.log_exact = -a * b * b + std::log(reduced);
    const double corr = 1.0 - 1.0 / (2.0 * a * b * b);
    out.log_estimate = -a * b * b - std::log(2.0 * b * a) + (corr > 0 ? std::log(corr) : 0.0);
    out.exact = std::exp(out.log_exact);
    out.estimate = std::exp(-a * b * b) / (2.0 * b * a) * corr;
    out.ratio = (corr > 0) ? std::exp(out.log_estimate - out.log_exact)
                           : out.estimate / out.exact;  // outside the asymptotic regime
    return out;
}

namespace {

const double kGauss10Nodes[5] = {0.14887433898163121, 0.43339539412924719, 0.67940956829902441,
                                 0.86506336668898451, 0.97390652851717172};
const double kGauss10Weights[5] = {0.29552422471475287, 0.26926671930999635, 0.21908636251598204,
                                   0.14945134915058059, 0.066671344308688138};

double gauss10(double lo, double hi, double (*f)(double, const void*), const void* ctx) {
    const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
    double s = 0.0;
    for (int i = 0; i < 5; ++i)
        s += kGauss10Weights[i] * (f(c - h * kGauss10Nodes[i], ctx) + f(c + h * kGauss10Nodes[i], ctx));
    return s * h;
}

double adapt(double lo, double hi, double whole, double (*f)(double, const void*), const void* ctx,
             double tol, int depth) {
    const double mid = 0.5 * (lo + hi);
    const double left = gauss10(lo, mid, f, ctx);
    const double right = gauss10(mid, hi, f, ctx);
    if (depth > 40 || std::abs(left + right - whole) <= tol * std::max(1.0, std::abs(left + right)))
        return left + right;
    return adapt(lo, mid, left, f, ctx, tol, depth + 1) +
           adapt(mid, hi, right, f, ctx, tol, depth + 1);
}

}  // namespace

double adaptive_quadrature(const std::vector<double>& breakpoints, double (*f)(double, const void*),
                           const void* ctx, double rel_tol) {
    if (breakpoints.size() < 2) throw std::invalid_argument("adaptive_quadrature: need an interval");
    double total = 0.0;
    for (size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        const double whole = gauss10(breakpoints[i], breakpoints[i + 1], f, ctx);
        total += adapt(breakpoints[i], breakpoints[i + 1], whole, f, ctx, rel_tol, 0);
    }
    return total;
}

SlopeFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("fit_loglog: size mismatch");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0) || y[i] == 0.0) continue;
        const double lx = std::log(x[i]), ly = std::log(std::abs(y[i]));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++n;
    }
    SlopeFit fit;
    fit.n = n;
    if (n >= 2) {
        const double den = n * sxx - sx * sx;
        fit.slope = (n * sxy - sx * sy) / den;
        fit.intercept = (sy - fit.slope * sx) / n;
    }
    return fit;
}

}  // namespace fuzzylab
