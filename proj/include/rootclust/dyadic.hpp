#ifndef ROOTCLUST_DYADIC_HPP
#define ROOTCLUST_DYADIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <string>

#include "rootclust/errors.hpp"

namespace rootclust {

using BigInt = boost::multiprecision::cpp_int;

/// Exact binary rational m * 2^e.  Canonical form: m odd, or m = 0 and e = 0.
/// Addition, subtraction and multiplication never round.
class Dyadic {
public:
    Dyadic() : m_(0), e_(0) {}
    Dyadic(int64_t v) : m_(v), e_(0) { normalize(); }  // NOLINT: implicit by design
    Dyadic(BigInt mantissa, int64_t exponent) : m_(std::move(mantissa)), e_(exponent) {
        normalize();
    }

    const BigInt& mantissa() const { return m_; }
    int64_t exponent() const { return e_; }

    bool is_zero() const { return m_.is_zero(); }
    int sign() const { return m_.sign(); }

    Dyadic operator-() const;
    Dyadic abs() const { return sign() < 0 ? -*this : *this; }

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b);

    Dyadic& operator+=(const Dyadic& b) { return *this = *this + b; }
    Dyadic& operator-=(const Dyadic& b) { return *this = *this - b; }
    Dyadic& operator*=(const Dyadic& b) { return *this = *this * b; }

    /// Exact multiplication by 2^k.
    Dyadic mul_pow2(int64_t k) const;

    static int compare(const Dyadic& a, const Dyadic& b);

    friend bool operator==(const Dyadic& a, const Dyadic& b) { return compare(a, b) == 0; }
    friend bool operator!=(const Dyadic& a, const Dyadic& b) { return compare(a, b) != 0; }
    friend bool operator<(const Dyadic& a, const Dyadic& b) { return compare(a, b) < 0; }
    friend bool operator<=(const Dyadic& a, const Dyadic& b) { return compare(a, b) <= 0; }
    friend bool operator>(const Dyadic& a, const Dyadic& b) { return compare(a, b) > 0; }
    friend bool operator>=(const Dyadic& a, const Dyadic& b) { return compare(a, b) >= 0; }

    /// Nearest multiple of 2^-p, ties rounded toward +infinity.  |result - x| <= 2^-(p+1).
    Dyadic round_nearest(int64_t p) const;
    /// Largest multiple of 2^-p that is <= x.
    Dyadic floor_to(int64_t p) const;
    /// Smallest multiple of 2^-p that is >= x.
    Dyadic ceil_to(int64_t p) const;

    /// floor(x) as a machine integer; throws OverflowError outside int64 range.
    int64_t floor_int64() const;

    /// Smallest k with |x| <= 2^k (0 for x = 0).  Used for guard-bit budgets.
    int64_t mag2_upper() const;

    double to_double() const;
    /// 17-significant-digit scientific rendering, deterministic.
    std::string to_decimal_string() const;
    /// Exact rendering "m*2^e" for diagnostics.
    std::string to_debug_string() const;

    static Dyadic pow2(int64_t k) { return Dyadic(BigInt(1), k); }
    /// Exact integer power (n >= 0).
    Dyadic pow(uint64_t n) const;

private:
    void normalize();
    BigInt m_;
    int64_t e_;
};

/// a + b with the exponent-range check shared by all dyadic ops.
int64_t checked_exp_add(int64_t a, int64_t b);

/// floor(m / 2^s) for s >= 0, exact sign handling.
BigInt shift_right_floor(const BigInt& m, int64_t s);

/// floor(sqrt(n)) for n >= 0.
BigInt isqrt(const BigInt& n);

/// floor(n^(1/k)) for n >= 0, k >= 1.
BigInt ikroot(const BigInt& n, uint64_t k);

}  // namespace rootclust

#endif
