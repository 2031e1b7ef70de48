#pragma once

#include <string>
#include <vector>

#include "fuzzylab/sphere_model.hpp"

namespace fuzzylab {

/// Matrix analogs of the spherical harmonics: Y^_l^l proportional to
/// (xbar^+)^l, lowered by the commutator action of Lbar_-. Built for
/// 0 <= l <= 2*lambda, indexed like sphere_index but with the doubled range.
struct FuzzyHarmonicSet {
    int lambda = 0;
    int l_max = 0;  // 2*lambda
    std::vector<OperatorMatrix> Y;  // index l*l + l + m
    std::vector<double> top_norm;   // |M_l| = sqrt((2l+1)!!/(4 pi (2l)!!))

    const OperatorMatrix& at(int l, int m) const { return Y[sphere_index(l, m)]; }
};

/// |M_l| over (sin(theta) e^{i phi})^l; the builder multiplies in the
/// (-1)^l 2^{l/2} that makes
/// the top coefficient match the orthonormal Condon-Shortley Y_l^l over
/// (t^+)^l = (sin(theta) e^{i phi}/sqrt(2))^l.
double harmonic_top_norm(int l);

/// Builds every Y^[l][m] for l <= l_max (default 2*lambda); rejects
/// l_max > 2*lambda. Normalization factors are assembled in log space.
FuzzyHarmonicSet build_fuzzy_harmonics(const SphereModel& m, int l_max = -1);

/// Single family at fixed l, highest weight first; keeps memory flat for
/// large-lambda spot checks.
std::vector<OperatorMatrix> fuzzy_harmonic_family(const SphereModel& m, int l);

/// CSV with columns l,m,row,col,re,im.
std::string fuzzy_harmonics_to_csv(const FuzzyHarmonicSet& set);

}  // namespace fuzzylab
