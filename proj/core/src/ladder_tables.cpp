#include "fuzzylab/ladder_tables.hpp"

#include <cmath>
#include <stdexcept>

#include "fuzzylab/text_format.hpp"

namespace fuzzylab {

LadderTable::LadderTable(int lambda_max) : lambda_max_(lambda_max) {
    if (lambda_max < 0) throw std::invalid_argument("LadderTable: lambda_max must be >= 0");
}

double LadderTable::A(int a, int l, int m) const {
    if (l < 1 || std::abs(m) > l || std::abs(m + a) > l - 1) return 0.0;
    const double den = (2.0 * l + 1) * (2.0 * l - 1);
    switch (a) {
        case 0:
            return std::sqrt((l + m) * (l - m) / den);
        case 1:
            return std::sqrt((l - m) * (l - m - 1.0) / (2.0 * den));
        case -1:
            return -std::sqrt((l + m) * (l + m - 1.0) / (2.0 * den));
        default:
            throw std::invalid_argument("LadderTable::A: a must be -1, 0 or +1");
    }
}

double LadderTable::B(int a, int l, int m) const {
    if (l < 0 || std::abs(m) > l || std::abs(m + a) > l + 1) return 0.0;
    const double den = (2.0 * l + 1) * (2.0 * l + 3);
    switch (a) {
        case 0:
            return std::sqrt((l + m + 1.0) * (l - m + 1.0) / den);
        case 1:
            return -std::sqrt((l + m + 1.0) * (l + m + 2.0) / (2.0 * den));
        case -1:
            return std::sqrt((l - m + 1.0) * (l - m + 2.0) / (2.0 * den));
        default:
            throw std::invalid_argument("LadderTable::B: a must be -1, 0 or +1");
    }
}

double LadderTable::gamma(int s, int l, int m) const {
    if (l < 0 || std::abs(m) > l || std::abs(m + s) > l) return 0.0;
    if (s == 1) return std::sqrt((l - m) * (l + m + 1.0) / 2.0);
    if (s == -1) return std::sqrt((l + m) * (l - m + 1.0) / 2.0);
    throw std::invalid_argument("LadderTable::gamma: sign must be +1 or -1");
}

std::string LadderTable::to_csv() const {
    std::string out = "a,l,m,A,B\n";
    for (int l = 0; l <= l_max(); ++l)
        for (int m = -l; m <= l; ++m)
            for (int a : {-1, 0, 1})
                out += std::to_string(a) + "," + std::to_string(l) + "," + std::to_string(m) + "," +
                       fmt17(A(a, l, m)) + "," + fmt17(B(a, l, m)) + "\n";
    return out;
}

LadderTable ladder_coefficients(int lambda_max) { return LadderTable(lambda_max); }

CheckReport verify_ladder_identities(const LadderTable& t) {
    CheckReport rep;
    rep.suite = "ladder-identities";
    const int lmax = t.l_max();

    auto scan = [&](const char* name, auto f) {
        double worst = 0.0;
        for (int l = 0; l <= lmax; ++l)
            for (int m = -l; m <= l; ++m) worst = std::max(worst, std::abs(f(l, m)));
        rep.add(name, worst, 1e-14);
    };

    // A-B transposition
    scan("AB", [&](int l, int m) {
        double w = 0.0;
        for (int a : {-1, 0, 1})
            if (l >= 1) w = std::max(w, std::abs(t.A(a, l, m) - t.B(-a, l - 1, m + a)));
        return w;
    });

    // the five A-coefficient families
    scan("Aproperties:exchange", [&](int l, int m) {
        double w = 0.0;
        for (int a : {-1, 0, 1})
            for (int b : {-1, 0, 1}) {
                const double v1 = t.A(b, l, m) * t.A(-a, l, m + b + a) +
                                  t.A(-b, l + 1, m + b) * t.A(a, l + 1, m + b);
                const double v2 = t.A(a, l, m) * t.A(-b, l, m + a + b) +
                                  t.A(-a, l + 1, m + a) * t.A(b, l + 1, m + a);
                w = std::max(w, std::abs(v1 - v2));
            }
        return w;
    });
    scan("Aproperties:braid", [&](int l, int m) {
        double w = 0.0;
        for (int a : {-1, 0, 1})
            for (int b : {-1, 0, 1})
                w = std::max(w, std::abs(t.A(b, l + 1, m) * t.A(a, l, m + b) -
                                         t.A(a, l + 1, m) * t.A(b, l, m + a)));
        return w;
    });
    scan("Aproperties:cross-zero", [&](int l, int m) {
        double s = 0.0;
        for (int a : {-1, 0, 1}) s += t.A(a, l + 1, m) * t.A(-a, l, m + a);
        return s;
    });
    scan("Aproperties:sum-l", [&](int l, int m) {
        double s = 0.0;
        for (int a : {-1, 0, 1}) s += t.A(a, l, m) * t.A(a, l, m);
        return s - l / (2.0 * l + 1);
    });
    scan("Aproperties:sum-l+1", [&](int l, int m) {
        double s = 0.0;
        for (int a : {-1, 0, 1}) s += t.A(a, l + 1, m - a) * t.A(a, l + 1, m - a);
        return s - (l + 1) / (2.0 * l + 1);
    });

    // nine mixed A/B/gamma families of the sphere commutators
    scan("mixed:AB-pm", [&](int l, int m) {
        if (l < 1) return 0.0;
        return t.A(-1, l, m) * t.B(1, l - 1, m - 1) - t.A(1, l, m) * t.B(-1, l - 1, m + 1) -
               m / (2.0 * l + 1);
    });
    scan("mixed:AB-0p", [&](int l, int m) {
        if (l < 1) return 0.0;
        return t.A(1, l, m) * t.B(0, l - 1, m + 1) - t.A(0, l, m) * t.B(1, l - 1, m) -
               t.gamma(1, l, m) / (2.0 * l + 1);
    });
    scan("mixed:AB-0m", [&](int l, int m) {
        if (l < 1) return 0.0;
        return t.A(-1, l, m) * t.B(0, l - 1, m - 1) - t.A(0, l, m) * t.B(-1, l - 1, m) +
               t.gamma(-1, l, m) / (2.0 * l + 1);
    });
    scan("mixed:Agamma-diag", [&](int l, int m) {
        double w = 0.0;
        for (int a : {-1, 1})
            w = std::max(w, std::abs(t.A(a, l, m) * t.gamma(a, l - 1, m + a) -
                                     t.A(a, l, m + a) * t.gamma(a, l, m)));
        return w;
    });
    scan("mixed:Bgamma-diag", [&](int l, int m) {
        double w = 0.0;
        for (int a : {-1, 1})
            w = std::max(w, std::abs(t.B(a, l, m) * t.gamma(a, l + 1, m + a) -
                                     t.B(a, l, m + a) * t.gamma(a, l, m)));
        return w;
    });
    scan("mixed:A0-raise", [&](int l, int m) {
        double w = 0.0;
        for (int s : {-1, 1})
            w = std::max(w, std::abs(t.A(0, l, m) * t.gamma(s, l - 1, m) -
                                     t.A(0, l, m + s) * t.gamma(s, l, m) + s * t.A(s, l, m)));
        return w;
    });
    scan("mixed:B0-raise", [&](int l, int m) {
        double w = 0.0;
        for (int s : {-1, 1})
            w = std::max(w, std::abs(t.B(0, l, m) * t.gamma(s, l + 1, m) -
                                     t.B(0, l, m + s) * t.gamma(s, l, m) + s * t.B(s, l, m)));
        return w;
    });
    scan("mixed:Apm-cross", [&](int l, int m) {
        double w = 0.0;
        for (int s : {-1, 1})
            w = std::max(w, std::abs(t.A(s, l, m) * t.gamma(-s, l - 1, m + s) -
                                     t.A(s, l, m - s) * t.gamma(-s, l, m) + s * t.A(0, l, m)));
        return w;
    });
    scan("mixed:Bpm-cross", [&](int l, int m) {
        double w = 0.0;
        for (int s : {-1, 1})
            w = std::max(w, std::abs(t.B(s, l, m) * t.gamma(-s, l + 1, m + s) -
                                     t.B(s, l, m - s) * t.gamma(-s, l, m) + s * t.B(0, l, m)));
        return w;
    });

    return rep;
}

}  // namespace fuzzylab
