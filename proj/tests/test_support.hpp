#pragma once

#include <complex>
#include <cstdint>
#include <cstdlib>
#include <string>

#include "fuzzylab/operator_matrix.hpp"

namespace fuzzylab::testing {

/// Deterministic generator for randomized test vectors; FUZZYLAB_SEED
/// overrides the default so failures reproduce across runs.
class Rng {
public:
    Rng() {
        if (const char* env = std::getenv("FUZZYLAB_SEED")) state_ = std::strtoull(env, nullptr, 10);
        if (state_ == 0) state_ = 0x5eed5eed5eedULL;
    }
    explicit Rng(uint64_t seed) : state_(seed ? seed : 1) {}

    uint64_t next() {
        state_ ^= state_ << 13;
        state_ ^= state_ >> 7;
        state_ ^= state_ << 17;
        return state_;
    }
    double uniform() { return (next() >> 11) * (1.0 / 9007199254740992.0); }
    double sym() { return 2.0 * uniform() - 1.0; }

private:
    uint64_t state_ = 0x5eed5eed5eedULL;
};

inline OperatorMatrix random_matrix(Rng& rng, int n) {
    OperatorMatrix m(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m(r, c) = Complex(rng.sym(), rng.sym());
    return m;
}

inline OperatorMatrix random_hermitian(Rng& rng, int n) {
    OperatorMatrix m = random_matrix(rng, n);
    return (m + m.adjoint()) * 0.5;
}

}  // namespace fuzzylab::testing
