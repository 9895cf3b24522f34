#ifndef ROOTCLUST_ELEMENTARY_HPP
#define ROOTCLUST_ELEMENTARY_HPP

#include "rootclust/interval.hpp"

namespace rootclust {

// Rigorous power-series enclosures of the elementary functions at dyadic
// points.  All results are sound; the width shrinks like 2^-q in the working
// precision q, so callers that need a specific output width wrap these in
// ApproxReal::converging.  Arguments are capped at |x| <= 2^10.

DyInterval exp_point(const Dyadic& x, int64_t q);
/// e^x - 1, nonnegative lower bound for x >= 0.
DyInterval expm1_point(const Dyadic& x, int64_t q);
DyInterval sin_point(const Dyadic& x, int64_t q);
DyInterval cos_point(const Dyadic& x, int64_t q);
DyInterval sinh_point(const Dyadic& x, int64_t q);
DyInterval cosh_point(const Dyadic& x, int64_t q);

/// Enclosure of Euler's number.
DyInterval e_enclosure(int64_t q);

BigInt factorial(uint64_t n);
BigInt binomial(uint64_t n, uint64_t k);
/// Enclosure of 1/n!.
DyInterval recip_factorial(uint64_t n, int64_t q);

}  // namespace rootclust

#endif
