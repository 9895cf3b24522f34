#ifndef ROOTCLUST_INTERVAL_HPP
#define ROOTCLUST_INTERVAL_HPP

#include "rootclust/dyadic.hpp"

namespace rootclust {

/// Closed interval with dyadic endpoints.  add/sub/mul/abs are exact; width
/// only ever enters through round_out, sqrt, reciprocal and k-th roots.
struct DyInterval {
    Dyadic lo, hi;

    DyInterval() = default;
    explicit DyInterval(const Dyadic& point) : lo(point), hi(point) {}
    DyInterval(Dyadic l, Dyadic h);

    static DyInterval of(int64_t l, int64_t h) { return DyInterval(Dyadic(l), Dyadic(h)); }

    Dyadic width() const { return hi - lo; }
    bool is_point() const { return lo == hi; }
    bool contains(const Dyadic& x) const { return lo <= x && x <= hi; }
    bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
    bool contains(const DyInterval& other) const {
        return lo <= other.lo && other.hi <= hi;
    }
    bool intersects(const DyInterval& other) const {
        return lo <= other.hi && other.lo <= hi;
    }

    /// Distance from the interval to the origin (0 if it contains 0).
    Dyadic dist0() const;
    /// max |x| over the interval.
    Dyadic mag_hi() const;

    /// (I)_p of the soft zero test: endpoints rounded to the 2^-p grid, then
    /// widened by 2^-p.  Always a strict outer enclosure.
    DyInterval round_out(int64_t p) const;
};

DyInterval operator+(const DyInterval& a, const DyInterval& b);
DyInterval operator-(const DyInterval& a, const DyInterval& b);
DyInterval operator-(const DyInterval& a);
DyInterval operator*(const DyInterval& a, const DyInterval& b);
DyInterval operator*(const DyInterval& a, const Dyadic& s);
DyInterval operator+(const DyInterval& a, const Dyadic& s);
DyInterval abs(const DyInterval& a);

/// Smallest interval containing both.
DyInterval hull(const DyInterval& a, const DyInterval& b);

/// sqrt with directed rounding: result contains sqrt([max(lo,0), hi]),
/// endpoint error below 2^-p.  Requires hi >= 0.
DyInterval sqrt_enclosure(const DyInterval& v, int64_t p);

/// 1/v for an interval with lo > 0; endpoint error below 2^-p plus the
/// propagated input width.
DyInterval recip_enclosure(const DyInterval& v, int64_t p);

/// v^(1/k) for v.lo >= 0, k >= 1; endpoint error at most 2^-p + input spread.
DyInterval kth_root_enclosure(const DyInterval& v, uint64_t k, int64_t p);

/// Enclosure of 1/n for a positive integer n.
DyInterval recip_integer(const BigInt& n, int64_t p);

Dyadic min(const Dyadic& a, const Dyadic& b);
Dyadic max(const Dyadic& a, const Dyadic& b);

}  // namespace rootclust

#endif
