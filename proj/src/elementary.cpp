#include "rootclust/elementary.hpp"

#include <cstdlib>

namespace rootclust {

namespace {

constexpr int64_t kArgCap = 1024;  // |x| <= 2^10, see the argument-reduction contract

void check_arg(const Dyadic& x) {
    if (x.abs() > Dyadic(kArgCap))
        throw Error("elementary function argument exceeds the 2^10 cap: " + x.to_debug_string());
}

// Powering of a nonnegative interval with per-step outward rounding.
DyInterval pow_interval(const DyInterval& base, uint64_t n, int64_t qa) {
    DyInterval r(Dyadic(1));
    DyInterval b = base;
    while (n > 0) {
        if (n & 1) r = (r * b).round_out(qa);
        n >>= 1;
        if (n > 0) b = (b * b).round_out(qa);
    }
    return r;
}

// Series for e^t on t in [0,1]: partial sum plus the tail bound 2*t^J/J!.
DyInterval exp_unit_series(const Dyadic& t, int64_t q) {
    if (t.sign() < 0 || t > Dyadic(1)) throw Error("exp series argument outside [0,1]");
    int64_t qa = q + 16;
    DyInterval sum(Dyadic(1));
    DyInterval term(Dyadic(1));  // t^j / j!
    Dyadic cut = Dyadic::pow2(-(q + 6));
    for (uint64_t j = 1; j < 4096; ++j) {
        term = (term * DyInterval(t) * recip_integer(BigInt(j), qa)).round_out(qa);
        sum = (sum + term).round_out(qa);
        if (term.hi.mul_pow2(1) <= cut) {
            // tail <= 2 * t^(j+1)/(j+1)! <= 2 * term_hi
            sum = sum + DyInterval(Dyadic(), term.hi.mul_pow2(1));
            return sum;
        }
    }
    throw Error("exp series failed to converge");
}

const DyInterval& e_cached() {
    static const DyInterval e = exp_unit_series(Dyadic(1), 1100);
    return e;
}

}  // namespace

DyInterval e_enclosure(int64_t q) {
    if (q <= 1024) return e_cached().round_out(q + 4);
    return exp_unit_series(Dyadic(1), q + 8);
}

DyInterval exp_point(const Dyadic& x, int64_t q) {
    check_arg(x);
    int64_t n = x.floor_int64();
    Dyadic t = x - Dyadic(n);
    // e^n spreads the relative error by a factor 2^(1.443|n|); budget for it.
    int64_t scale_bits = static_cast<int64_t>(3 * (std::abs(n) / 2 + 1)) + 8;
    int64_t qa = q + scale_bits;
    DyInterval frac = exp_unit_series(t, qa);
    DyInterval en(Dyadic(1));
    if (n != 0) {
        DyInterval e1 = e_enclosure(qa);
        en = pow_interval(e1, static_cast<uint64_t>(std::abs(n)), qa);
        if (n < 0) en = recip_enclosure(en, qa);
    }
    DyInterval r = (frac * en).round_out(q + 4);
    if (r.lo.sign() < 0) r.lo = Dyadic();  // e^x > 0
    return r;
}

DyInterval expm1_point(const Dyadic& x, int64_t q) {
    DyInterval r = exp_point(x, q + 2) - DyInterval(Dyadic(1));
    if (x.sign() >= 0 && r.lo.sign() < 0) r.lo = Dyadic();
    return r;
}

namespace {

// Common sin/cos kernel: sum_{j} (-1)^j y^(2j+s)/(2j+s)! with s = 1 for sin,
// s = 0 for cos, plus the Lagrange remainder |y|^N/N!.
DyInterval sincos_series(const Dyadic& y, int64_t q, int start) {
    int64_t qa = q + 16;
    DyInterval y2(y * y);
    DyInterval term = start == 0 ? DyInterval(Dyadic(1)) : DyInterval(y);
    DyInterval sum = term;
    Dyadic cut = Dyadic::pow2(-(q + 6));
    Dyadic ay = y.abs();
    int sign = -1;
    for (uint64_t j = 1; j < 100000; ++j) {
        uint64_t deg = 2 * j + static_cast<uint64_t>(start);
        BigInt den = BigInt(deg) * BigInt(deg - 1);
        term = (term * y2 * recip_integer(den, qa)).round_out(qa);
        DyInterval signed_term = sign > 0 ? term : -term;
        sum = (sum + signed_term).round_out(qa);
        sign = -sign;
        // Remainder after the degree-deg term is |y|^(deg+1)/(deg+1)!; once
        // terms decay monotonically this is below the next term's bound.
        if (Dyadic(static_cast<int64_t>(deg + 1)) > ay) {
            // Lagrange remainder: |y|^(deg+1)/(deg+1)! <= |term| * |y|.
            Dyadic bound = term.mag_hi() * ay;
            if (bound <= cut) {
                sum = sum + DyInterval(-bound, bound);
                return sum;
            }
        }
    }
    throw Error("sin/cos series failed to converge");
}

}  // namespace

DyInterval sin_point(const Dyadic& x, int64_t q) {
    check_arg(x);
    if (x.is_zero()) return DyInterval(Dyadic());
    if (x.sign() < 0) return -sin_point(-x, q);
    return sincos_series(x, q, 1).round_out(q + 4);
}

DyInterval cos_point(const Dyadic& x, int64_t q) {
    check_arg(x);
    if (x.sign() < 0) return cos_point(-x, q);
    return sincos_series(x, q, 0).round_out(q + 4);
}

DyInterval sinh_point(const Dyadic& x, int64_t q) {
    check_arg(x);
    if (x.sign() < 0) return -sinh_point(-x, q);
    int64_t qa = q + 8;
    DyInterval ex = exp_point(x, qa);
    DyInterval em = recip_enclosure(DyInterval(max(ex.lo, Dyadic(1).mul_pow2(-1)), ex.hi), qa);
    DyInterval r = ((ex - em) * Dyadic(1).mul_pow2(-1)).round_out(q + 4);
    if (x.sign() > 0 && r.lo.sign() < 0) r.lo = Dyadic();
    return r;
}

DyInterval cosh_point(const Dyadic& x, int64_t q) {
    check_arg(x);
    Dyadic ax = x.abs();
    int64_t qa = q + 8;
    DyInterval ex = exp_point(ax, qa);
    DyInterval em = recip_enclosure(DyInterval(max(ex.lo, Dyadic(1).mul_pow2(-1)), ex.hi), qa);
    DyInterval r = ((ex + em) * Dyadic(1).mul_pow2(-1)).round_out(q + 4);
    if (r.lo < Dyadic(1)) r.lo = Dyadic(1);  // cosh >= 1
    return r;
}

BigInt factorial(uint64_t n) {
    BigInt r = 1;
    for (uint64_t i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial(uint64_t n, uint64_t k) {
    if (k > n) return BigInt(0);
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (uint64_t i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

DyInterval recip_factorial(uint64_t n, int64_t q) {
    return recip_integer(factorial(n), q);
}

}  // namespace rootclust
