#include "fuzzylab/spherical_harmonics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fuzzylab {

namespace {
constexpr double kPi = std::numbers::pi;
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    for (int i = 1; i <= n; ++i) {
        double x = std::cos(kPi * (i - 0.25) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1) * x * p1 - (j - 1) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) {
                // refresh dp at the converged node
                p0 = 1.0;
                p1 = x;
                for (int j = 2; j <= n; ++j) {
                    const double p2 = ((2.0 * j - 1) * x * p1 - (j - 1) * p0) / j;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                break;
            }
        }
        nodes[n - i] = x;  // ascending order
        weights[n - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
}

SphereGrid::SphereGrid(int nt, int np) : n_theta(nt), n_phi(np) {
    if (nt < 1 || np < 1) throw std::invalid_argument("SphereGrid: sizes must be positive");
    gauss_legendre(nt, cos_theta, w_theta);
    phi.resize(np);
    for (int i = 0; i < np; ++i) phi[i] = 2.0 * kPi * i / np;
}

SphereGrid SphereGrid::for_lambda(int lambda_max) {
    return SphereGrid(2 * lambda_max + 16, 4 * lambda_max + 33);
}

Complex eval_Ylm_cs(int l, int m, double x, Complex e_iphi) {
    if (std::abs(m) > l) throw std::invalid_argument("eval_Ylm: |m| > l");
    const int am = std::abs(m);
    const double s = std::sqrt(std::max(0.0, 1.0 - x * x));
    // P_am^am, fully normalized, Condon-Shortley phase
    double pmm = std::sqrt(1.0 / (4.0 * kPi));
    for (int i = 1; i <= am; ++i) pmm *= -std::sqrt((2.0 * i + 1) / (2.0 * i)) * s;
    double p = pmm;
    if (l > am) {
        double pm1 = std::sqrt(2.0 * am + 3) * x * pmm;
        p = pm1;
        for (int ll = am + 2; ll <= l; ++ll) {
            const double a = std::sqrt((4.0 * ll * ll - 1) / (static_cast<double>(ll) * ll - am * am));
            const double b =
                std::sqrt(((ll - 1.0) * (ll - 1) - am * am) / (4.0 * (ll - 1.0) * (ll - 1) - 1));
            const double pn = a * (x * pm1 - b * pmm);
            pmm = pm1;
            pm1 = pn;
            p = pn;
        }
    }
    Complex phase = 1.0;
    Complex e = e_iphi;
    if (m < 0) e = std::conj(e_iphi);
    for (int i = 0; i < am; ++i) phase *= e;
    Complex val = p * phase;
    if (m < 0 && (am % 2)) val = -val;
    return val;
}

Complex eval_Ylm(int l, int m, double theta, double phi) {
    return eval_Ylm_cs(l, m, std::cos(theta), std::polar(1.0, phi));
}

Complex sphere_inner_product(const std::vector<Complex>& f, const std::vector<Complex>& g,
                             const SphereGrid& grid) {
    if (f.size() != grid.size() || g.size() != grid.size())
        throw std::invalid_argument("sphere_inner_product: sample/grid shape mismatch");
    Complex total = 0.0;
    for (int it = 0; it < grid.n_theta; ++it) {
        Complex row = 0.0;
        const size_t base = static_cast<size_t>(it) * grid.n_phi;
        for (int ip = 0; ip < grid.n_phi; ++ip) row += std::conj(f[base + ip]) * g[base + ip];
        total += grid.weight(it) * row;
    }
    return total;
}

}  // namespace fuzzylab
