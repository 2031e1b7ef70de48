#include "fuzzylab/fuzzy_harmonics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fuzzylab/text_format.hpp"

namespace fuzzylab {

namespace {

double log_factorial(int n) { return std::lgamma(n + 1.0); }

// ln |M_l| with (2l+1)!! = (2l+1)!/(2^l l!) and (2l)!! = 2^l l!
double log_top_norm(int l) {
    return 0.5 * (log_factorial(2 * l + 1) - 2.0 * log_factorial(l) - 2.0 * l * std::numbers::ln2 -
                  std::log(4.0 * std::numbers::pi));
}

// ln of the lowering coefficient sqrt((l+m)! 2^{l-m} / ((2l)! (l-m)!))
double log_lowering(int l, int m) {
    return 0.5 * (log_factorial(l + m) + (l - m) * std::numbers::ln2 - log_factorial(2 * l) -
                  log_factorial(l - m));
}

}  // namespace

double harmonic_top_norm(int l) { return std::exp(log_top_norm(l)); }

std::vector<OperatorMatrix> fuzzy_harmonic_family(const SphereModel& m, int l) {
    if (l < 0 || l > 2 * m.lambda)
        throw std::invalid_argument("fuzzy_harmonic_family: l must satisfy 0 <= l <= 2*lambda");
    // top coefficient over (t^+)^l: (-1)^l 2^{l/2} |M_l| keeps Y^_l^l matched
    // to the Condon-Shortley highest-weight harmonic
    const double sign = (l % 2 == 0) ? 1.0 : -1.0;
    const double log_m = log_top_norm(l) + 0.5 * l * std::numbers::ln2;

    const OperatorMatrix& lminus = m.L_sph[0];
    OperatorMatrix chain = matrix_power(m.x_sph[2], l);

    std::vector<OperatorMatrix> fam;
    fam.reserve(2 * l + 1);
    for (int mm = l; mm >= -l; --mm) {
        fam.push_back(chain * (sign * std::exp(log_m + log_lowering(l, mm))));
        if (mm > -l) chain = commutator(lminus, chain);
    }
    return fam;  // fam[l - m] holds Y^_l^m
}

FuzzyHarmonicSet build_fuzzy_harmonics(const SphereModel& m, int l_max) {
    if (l_max < 0) l_max = 2 * m.lambda;
    if (l_max > 2 * m.lambda)
        throw std::invalid_argument("build_fuzzy_harmonics: l_max exceeds 2*lambda");

    FuzzyHarmonicSet set;
    set.lambda = m.lambda;
    set.l_max = l_max;
    set.Y.resize(static_cast<size_t>(l_max + 1) * (l_max + 1));
    set.top_norm.resize(l_max + 1);
    for (int l = 0; l <= l_max; ++l) {
        set.top_norm[l] = harmonic_top_norm(l);
        std::vector<OperatorMatrix> fam = fuzzy_harmonic_family(m, l);
        for (int mm = l; mm >= -l; --mm) set.Y[sphere_index(l, mm)] = std::move(fam[l - mm]);
    }
    return set;
}

std::string fuzzy_harmonics_to_csv(const FuzzyHarmonicSet& set) {
    std::string out = "l,m,row,col,re,im\n";
    for (int l = 0; l <= set.l_max; ++l)
        for (int mm = -l; mm <= l; ++mm) {
            const OperatorMatrix& y = set.at(l, mm);
            for (int r = 0; r < y.dim(); ++r)
                for (int c = 0; c < y.dim(); ++c)
                    out += std::to_string(l) + "," + std::to_string(mm) + "," + std::to_string(r) +
                           "," + std::to_string(c) + "," + fmt17(y(r, c).real()) + "," +
                           fmt17(y(r, c).imag()) + "\n";
        }
    return out;
}

}  // namespace fuzzylab
