#pragma once

#include <vector>

#include "fuzzylab/check_report.hpp"

namespace fuzzylab {

/// Exact angular ladder data: A and B couple Y_l^m to Y_{l∓1}^{m+a} under
/// multiplication by t^a, gamma are the L_± matrix elements. Entries with
/// out-of-range target indices are exactly zero.
class LadderTable {
public:
    LadderTable() = default;
    /// Tables cover 0 <= l <= lambda_max + 2.
    explicit LadderTable(int lambda_max);

    int lambda_max() const { return lambda_max_; }
    int l_max() const { return lambda_max_ + 2; }

    /// <Y_{l-1}^{m+a}, t^a Y_l^m>, a in {-1,0,+1}.
    double A(int a, int l, int m) const;
    /// <Y_{l+1}^{m+a}, t^a Y_l^m>.
    double B(int a, int l, int m) const;
    /// L_± Y_l^m = gamma(±1,l,m) Y_l^{m±1}.
    double gamma(int s, int l, int m) const;

    /// CSV dump, columns a,l,m,A,B.
    std::string to_csv() const;

private:
    int lambda_max_ = -1;
};

LadderTable ladder_coefficients(int lambda_max);

/// Checks the five sum/product identity families of the A coefficients plus
/// the nine mixed A/B/gamma identities used by the sphere algebra, over all
/// indices in range. Violations are reported, never thrown.
CheckReport verify_ladder_identities(const LadderTable& t);

}  // namespace fuzzylab
