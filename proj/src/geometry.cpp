#include "rootclust/geometry.hpp"

namespace rootclust {

CRect CRect::inflate(const Dyadic& t) const {
    if (t.sign() < 0) throw Error("inflate by a negative amount");
    DyInterval pad(-t, t);
    return CRect(re + pad, im + pad);
}

DyInterval CRect::magnitude(int64_t p) const {
    Dyadic rl = re.dist0(), il = im.dist0();
    Dyadic rh = re.mag_hi(), ih = im.mag_hi();
    return DyInterval(sqrt_enclosure(DyInterval(rl * rl + il * il), p).lo,
                      sqrt_enclosure(DyInterval(rh * rh + ih * ih), p).hi);
}

CRect operator+(const CRect& a, const CRect& b) { return CRect(a.re + b.re, a.im + b.im); }
CRect operator-(const CRect& a, const CRect& b) { return CRect(a.re - b.re, a.im - b.im); }
CRect operator-(const CRect& a) { return CRect(-a.re, -a.im); }

CRect operator*(const CRect& a, const CRect& b) {
    return CRect(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

CRect operator*(const CRect& a, const DyInterval& s) {
    return CRect(a.re * s, a.im * s);
}

ComplexBox::ComplexBox(ComplexDyadic c, Dyadic w) : center(std::move(c)), width(std::move(w)) {
    if (width.sign() <= 0) throw Error("box width must be positive");
}

CRect ComplexBox::rect() const {
    Dyadic h = half_width();
    return CRect(DyInterval(center.re - h, center.re + h),
                 DyInterval(center.im - h, center.im + h));
}

bool ComplexBox::contains(const ComplexDyadic& z) const {
    Dyadic h = half_width();
    return (z.re - center.re).abs() <= h && (z.im - center.im).abs() <= h;
}

ComplexBox ComplexBox::scale(const Dyadic& lambda) const {
    if (lambda.sign() <= 0) throw Error("box scale factor must be positive");
    return ComplexBox(center, width * lambda);
}

std::array<ComplexBox, 4> ComplexBox::subdivide4() const {
    Dyadic q = width.mul_pow2(-2);  // w/4
    Dyadic h = width.mul_pow2(-1);  // child width
    return {ComplexBox({center.re - q, center.im - q}, h),
            ComplexBox({center.re + q, center.im - q}, h),
            ComplexBox({center.re - q, center.im + q}, h),
            ComplexBox({center.re + q, center.im + q}, h)};
}

Disc::Disc(ComplexDyadic c, Dyadic r) : center(std::move(c)), radius(std::move(r)) {
    if (radius.sign() < 0) throw Error("disc radius must be nonnegative");
}

bool Disc::contains(const ComplexDyadic& z) const {
    return (z - center).norm() <= radius * radius;
}

namespace {

// Smallest integer u with u*2^-21 >= sqrt(2); computed once from an integer
// square root so no floating constant enters the kernel.
const BigInt& sqrt2_scaled_up() {
    static const BigInt u = isqrt(BigInt(2) << 42) + 1;
    return u;
}

}  // namespace

Dyadic radius_upper_of_width(const Dyadic& w) {
    if (w.sign() < 0) throw Error("radius of a negative width");
    // w/sqrt(2) = w*sqrt(2)/2 <= w * u * 2^-22.
    return (w * Dyadic(sqrt2_scaled_up(), 0)).mul_pow2(-22);
}

Dyadic radius_upper(const ComplexBox& b) { return radius_upper_of_width(b.width); }

Disc disc_of(const ComplexBox& b) { return Disc(b.center, radius_upper(b)); }

Dyadic half_diagonal_upper(const Dyadic& r) {
    if (r.sign() < 0) throw Error("half-diagonal of a negative radius");
    return (r * Dyadic(sqrt2_scaled_up(), 0)).mul_pow2(-21);
}

bool discs_intersect(const Disc& a, const Disc& b) {
    Dyadic s = a.radius + b.radius;
    return (a.center - b.center).norm() <= s * s;
}

}  // namespace rootclust
