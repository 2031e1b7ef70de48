#pragma once

#include <complex>
#include <string>

namespace fuzzylab {

/// Fixed float formatting used by every serialized report:
/// 17 significant digits, '.' separator, no locale. Identical
/// configs must produce byte-identical files.
std::string fmt17(double x);

std::string fmt17(std::complex<double> z);  // "re,im" pair for CSV cells

}  // namespace fuzzylab
