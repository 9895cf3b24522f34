#include "rootclust/dyadic.hpp"

#include <charconv>
#include <cmath>
#include <limits>

namespace rootclust {

namespace {

// Exponents live well inside int64 so that sums of a few of them cannot wrap.
constexpr int64_t kMaxExp = int64_t(1) << 56;
// Aligning two dyadics whose exponents differ by more than this would allocate
// gigabyte mantissas; nothing at desk scale comes close.
constexpr int64_t kMaxShift = int64_t(1) << 26;

int64_t checked_shift(int64_t a, int64_t b) {
    int64_t d = a - b;  // both bounded by kMaxExp, no wrap
    if (d > kMaxShift || d < -kMaxShift)
        throw OverflowError("dyadic alignment shift too large: " + std::to_string(d));
    return d;
}

}  // namespace

int64_t checked_exp_add(int64_t a, int64_t b) {
    __int128 s = static_cast<__int128>(a) + b;
    if (s > kMaxExp || s < -kMaxExp)
        throw OverflowError("dyadic exponent out of range: " + std::to_string(static_cast<long long>(s)));
    return static_cast<int64_t>(s);
}

BigInt shift_right_floor(const BigInt& m, int64_t s) {
    if (s > kMaxShift || s < -kMaxShift)
        throw OverflowError("mantissa shift too large: " + std::to_string(s));
    if (s <= 0) return m << (-s);
    if (m.sign() >= 0) return m >> s;
    // For negatives, >> on cpp_int truncates toward zero; force floor.
    BigInt q = (-m) >> s;
    if (((-m) & ((BigInt(1) << s) - 1)) != 0) ++q;
    return -q;
}

BigInt isqrt(const BigInt& n) {
    return boost::multiprecision::sqrt(n);
}

BigInt ikroot(const BigInt& n, uint64_t k) {
    if (n < 0) throw Error("ikroot of negative value");
    if (k == 0) throw Error("ikroot with k = 0");
    if (k == 1 || n < 2) return n;
    if (k == 2) return isqrt(n);
    uint64_t bits = boost::multiprecision::msb(n) + 1;
    BigInt x = BigInt(1) << (bits / k + 1);
    // Newton iteration on x^k = n, monotone decreasing once above the root.
    while (true) {
        BigInt xk1 = boost::multiprecision::pow(x, static_cast<unsigned>(k - 1));
        BigInt next = ((k - 1) * x + n / xk1) / k;
        if (next >= x) break;
        x = next;
    }
    while (boost::multiprecision::pow(x, static_cast<unsigned>(k)) > n) --x;
    while (boost::multiprecision::pow(x + 1, static_cast<unsigned>(k)) <= n) ++x;
    return x;
}

void Dyadic::normalize() {
    if (m_.is_zero()) {
        e_ = 0;
        return;
    }
    uint64_t tz = boost::multiprecision::lsb(m_.sign() > 0 ? m_ : BigInt(-m_));
    if (tz > 0) {
        m_ >>= tz;
        e_ = checked_exp_add(e_, static_cast<int64_t>(tz));
    }
    if (e_ > kMaxExp || e_ < -kMaxExp)
        throw OverflowError("dyadic exponent out of range: " + std::to_string(e_));
}

Dyadic Dyadic::operator-() const {
    Dyadic r;
    r.m_ = -m_;
    r.e_ = e_;
    return r;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int64_t e = std::min(a.e_, b.e_);
    BigInt m = (a.m_ << checked_shift(a.e_, e)) + (b.m_ << checked_shift(b.e_, e));
    return Dyadic(std::move(m), e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return -b;
    int64_t e = std::min(a.e_, b.e_);
    BigInt m = (a.m_ << checked_shift(a.e_, e)) - (b.m_ << checked_shift(b.e_, e));
    return Dyadic(std::move(m), e);
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    if (a.is_zero() || b.is_zero()) return Dyadic();
    return Dyadic(a.m_ * b.m_, checked_exp_add(a.e_, b.e_));
}

Dyadic Dyadic::mul_pow2(int64_t k) const {
    if (is_zero()) return Dyadic();
    Dyadic r;
    r.m_ = m_;
    r.e_ = checked_exp_add(e_, k);
    return r;
}

int Dyadic::compare(const Dyadic& a, const Dyadic& b) {
    int sa = a.sign(), sb = b.sign();
    if (sa != sb) return sa < sb ? -1 : 1;
    if (sa == 0) return 0;
    return (a - b).sign();
}

Dyadic Dyadic::floor_to(int64_t p) const {
    int64_t s = -p - e_;
    if (s <= 0 || is_zero()) return *this;  // already on the 2^-p grid
    if (mag2_upper() <= -(p + 2)) {
        // Far below grid resolution; floor is 0 or -2^-p.
        return sign() >= 0 ? Dyadic() : Dyadic(BigInt(-1), -p);
    }
    if (s > kMaxShift)
        throw OverflowError("grid shift too large: " + std::to_string(s));
    return Dyadic(shift_right_floor(m_, s), -p);
}

Dyadic Dyadic::ceil_to(int64_t p) const {
    return -((-*this).floor_to(p));
}

Dyadic Dyadic::round_nearest(int64_t p) const {
    int64_t s = -p - e_;
    if (s <= 0 || is_zero()) return *this;
    if (mag2_upper() <= -(p + 2)) return Dyadic();  // |x| <= 2^-(p+2), rounds to 0
    if (s > kMaxShift)
        throw OverflowError("grid shift too large: " + std::to_string(s));
    BigInt half = BigInt(1) << (s - 1);
    return Dyadic(shift_right_floor(m_ + half, s), -p);
}

int64_t Dyadic::floor_int64() const {
    Dyadic f = floor_to(0);
    BigInt v = f.m_ << f.e_;  // e_ >= 0 after floor_to(0)
    if (v > std::numeric_limits<int64_t>::max() || v < std::numeric_limits<int64_t>::min())
        throw OverflowError("dyadic floor outside int64 range");
    return static_cast<int64_t>(v);
}

int64_t Dyadic::mag2_upper() const {
    if (is_zero()) return 0;
    BigInt a = m_.sign() > 0 ? m_ : BigInt(-m_);
    return checked_exp_add(static_cast<int64_t>(boost::multiprecision::msb(a)) + 1, e_);
}

double Dyadic::to_double() const {
    if (is_zero()) return 0.0;
    BigInt a = m_.sign() > 0 ? m_ : BigInt(-m_);
    int64_t bits = static_cast<int64_t>(boost::multiprecision::msb(a)) + 1;
    int64_t drop = bits - 64;
    double d;
    int64_t e = e_;
    if (drop > 0) {
        a >>= drop;
        e += drop;
        d = a.convert_to<double>();
    } else {
        d = a.convert_to<double>();
    }
    if (m_.sign() < 0) d = -d;
    if (e > 3000) return m_.sign() < 0 ? -std::numeric_limits<double>::infinity()
                                       : std::numeric_limits<double>::infinity();
    if (e < -3000) return m_.sign() < 0 ? -0.0 : 0.0;
    return std::ldexp(d, static_cast<int>(e));
}

std::string Dyadic::to_decimal_string() const {
    double d = to_double();
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, d, std::chars_format::scientific, 16);
    return std::string(buf, res.ptr);
}

std::string Dyadic::to_debug_string() const {
    return m_.str() + "*2^" + std::to_string(e_);
}

Dyadic Dyadic::pow(uint64_t n) const {
    Dyadic r(1);
    Dyadic base = *this;
    while (n > 0) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

}  // namespace rootclust
