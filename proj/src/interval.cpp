#include "rootclust/interval.hpp"

namespace rootclust {

Dyadic min(const Dyadic& a, const Dyadic& b) { return a <= b ? a : b; }
Dyadic max(const Dyadic& a, const Dyadic& b) { return a >= b ? a : b; }

DyInterval::DyInterval(Dyadic l, Dyadic h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw Error("interval endpoints out of order");
}

Dyadic DyInterval::dist0() const {
    if (contains_zero()) return Dyadic();
    return lo.sign() > 0 ? lo : -hi;
}

Dyadic DyInterval::mag_hi() const {
    return max(lo.abs(), hi.abs());
}

DyInterval DyInterval::round_out(int64_t p) const {
    Dyadic g = Dyadic::pow2(-p);
    return DyInterval(lo.round_nearest(p) - g, hi.round_nearest(p) + g);
}

DyInterval operator+(const DyInterval& a, const DyInterval& b) {
    return DyInterval(a.lo + b.lo, a.hi + b.hi);
}

DyInterval operator-(const DyInterval& a, const DyInterval& b) {
    return DyInterval(a.lo - b.hi, a.hi - b.lo);
}

DyInterval operator-(const DyInterval& a) {
    return DyInterval(-a.hi, -a.lo);
}

DyInterval operator*(const DyInterval& a, const DyInterval& b) {
    Dyadic p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return DyInterval(min(min(p1, p2), min(p3, p4)), max(max(p1, p2), max(p3, p4)));
}

DyInterval operator*(const DyInterval& a, const Dyadic& s) {
    if (s.sign() >= 0) return DyInterval(a.lo * s, a.hi * s);
    return DyInterval(a.hi * s, a.lo * s);
}

DyInterval operator+(const DyInterval& a, const Dyadic& s) {
    return DyInterval(a.lo + s, a.hi + s);
}

DyInterval abs(const DyInterval& a) {
    if (a.lo.sign() >= 0) return a;
    if (a.hi.sign() <= 0) return DyInterval(-a.hi, -a.lo);
    return DyInterval(Dyadic(), a.mag_hi());
}

DyInterval hull(const DyInterval& a, const DyInterval& b) {
    return DyInterval(min(a.lo, b.lo), max(a.hi, b.hi));
}

namespace {

// floor(v * 4^p) for v >= 0.
BigInt floor_scaled_sq(const Dyadic& v, int64_t p) {
    int64_t s = checked_exp_add(v.exponent(), 2 * p);
    return shift_right_floor(v.mantissa(), -s);
}

Dyadic sqrt_down(const Dyadic& v, int64_t p) {
    if (v.sign() <= 0) return Dyadic();
    return Dyadic(isqrt(floor_scaled_sq(v, p)), -p);
}

Dyadic sqrt_up(const Dyadic& v, int64_t p) {
    if (v.sign() <= 0) return Dyadic();
    return Dyadic(isqrt(floor_scaled_sq(v, p)) + 1, -p);
}

}  // namespace

DyInterval sqrt_enclosure(const DyInterval& v, int64_t p) {
    if (v.hi.sign() < 0) throw Error("sqrt of a negative interval");
    return DyInterval(sqrt_down(v.lo, p), sqrt_up(v.hi, p));
}

namespace {

// Directed 1/v for v > 0: error strictly below 2^-p.
Dyadic recip_down(const Dyadic& v, int64_t p) {
    BigInt m = v.mantissa();  // > 0
    int64_t bl = static_cast<int64_t>(boost::multiprecision::msb(m)) + 1;
    int64_t q = p + std::max<int64_t>(0, -v.exponent()) + bl + 2;
    BigInt n = (BigInt(1) << q) / m;
    return Dyadic(n, checked_exp_add(-q, -v.exponent()));
}

Dyadic recip_up(const Dyadic& v, int64_t p) {
    BigInt m = v.mantissa();
    int64_t bl = static_cast<int64_t>(boost::multiprecision::msb(m)) + 1;
    int64_t q = p + std::max<int64_t>(0, -v.exponent()) + bl + 2;
    BigInt n = (BigInt(1) << q) / m + 1;
    return Dyadic(n, checked_exp_add(-q, -v.exponent()));
}

}  // namespace

DyInterval recip_enclosure(const DyInterval& v, int64_t p) {
    if (v.lo.sign() <= 0) throw Error("reciprocal of an interval touching 0");
    return DyInterval(recip_down(v.hi, p), recip_up(v.lo, p));
}

DyInterval recip_integer(const BigInt& n, int64_t p) {
    if (n <= 0) throw Error("reciprocal of a non-positive integer");
    BigInt num = BigInt(1) << p;
    return DyInterval(Dyadic(num / n, -p), Dyadic(num / n + 1, -p));
}

DyInterval kth_root_enclosure(const DyInterval& v, uint64_t k, int64_t p) {
    if (v.hi.sign() < 0) throw Error("k-th root of a negative interval");
    if (k == 1) return DyInterval(max(v.lo, Dyadic()), v.hi);
    auto scaled = [p, k](const Dyadic& x) {
        int64_t s = checked_exp_add(x.exponent(), static_cast<int64_t>(k) * p);
        return shift_right_floor(x.mantissa(), -s);
    };
    Dyadic lo, hi;
    if (v.lo.sign() > 0) lo = Dyadic(ikroot(scaled(v.lo), k), -p);
    if (v.hi.sign() > 0) hi = Dyadic(ikroot(scaled(v.hi), k) + 1, -p);
    return DyInterval(lo, hi);
}

}  // namespace rootclust
