#ifndef ROOTCLUST_TEST_UTIL_HPP
#define ROOTCLUST_TEST_UTIL_HPP

#include <random>

#include "rootclust/dyadic.hpp"
#include "rootclust/geometry.hpp"

namespace rootclust::testutil {

// Deterministic random dyadics: mantissas up to `bits` bits, exponents in
// [emin, emax].
inline Dyadic random_dyadic(std::mt19937_64& rng, int bits = 40, int emin = -20, int emax = 10) {
    std::uniform_int_distribution<int64_t> mant(-(int64_t(1) << bits), int64_t(1) << bits);
    std::uniform_int_distribution<int64_t> expo(emin, emax);
    return Dyadic(BigInt(mant(rng)), expo(rng));
}

inline Dyadic random_positive_dyadic(std::mt19937_64& rng, int bits = 40, int emin = -20,
                                     int emax = 10) {
    std::uniform_int_distribution<int64_t> mant(1, int64_t(1) << bits);
    std::uniform_int_distribution<int64_t> expo(emin, emax);
    return Dyadic(BigInt(mant(rng)), expo(rng));
}

inline ComplexDyadic random_complex(std::mt19937_64& rng, int bits = 20, int emin = -8,
                                    int emax = 2) {
    return ComplexDyadic(random_dyadic(rng, bits, emin, emax),
                         random_dyadic(rng, bits, emin, emax));
}

// Sample a dyadic uniformly-ish inside [iv.lo, iv.hi] on a 2^-60 grid.
inline Dyadic random_in(std::mt19937_64& rng, const DyInterval& iv) {
    std::uniform_int_distribution<uint64_t> u;
    Dyadic w = iv.width();
    if (w.is_zero()) return iv.lo;
    Dyadic frac(BigInt(u(rng) >> 4), -60);  // in [0, 1)
    return iv.lo + w * frac;
}

}  // namespace rootclust::testutil

#endif
