#include "fuzzylab/text_format.hpp"

#include <cstdio>

namespace fuzzylab {

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string fmt17(std::complex<double> z) { return fmt17(z.real()) + "," + fmt17(z.imag()); }

}  // namespace fuzzylab
