#ifndef ROOTCLUST_GEOMETRY_HPP
#define ROOTCLUST_GEOMETRY_HPP

#include <array>

#include "rootclust/interval.hpp"

namespace rootclust {

struct ComplexDyadic {
    Dyadic re, im;

    ComplexDyadic() = default;
    ComplexDyadic(Dyadic r, Dyadic i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    ComplexDyadic operator-() const { return {-re, -im}; }
    friend ComplexDyadic operator+(const ComplexDyadic& a, const ComplexDyadic& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexDyadic operator-(const ComplexDyadic& a, const ComplexDyadic& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexDyadic operator*(const ComplexDyadic& a, const ComplexDyadic& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const ComplexDyadic& a, const ComplexDyadic& b) {
        return a.re == b.re && a.im == b.im;
    }
    /// |z|^2, exact.
    Dyadic norm() const { return re * re + im * im; }
};

/// Axis-aligned complex rectangle; the enclosure type for complex values.
/// All arithmetic is exact, so rectangles built from exact inputs stay exact.
struct CRect {
    DyInterval re, im;

    CRect() = default;
    CRect(DyInterval r, DyInterval i) : re(std::move(r)), im(std::move(i)) {}
    explicit CRect(const ComplexDyadic& z) : re(z.re), im(z.im) {}

    bool is_point() const { return re.is_point() && im.is_point(); }
    bool contains(const ComplexDyadic& z) const {
        return re.contains(z.re) && im.contains(z.im);
    }
    bool contains(const CRect& o) const { return re.contains(o.re) && im.contains(o.im); }
    bool intersects(const CRect& o) const { return re.intersects(o.re) && im.intersects(o.im); }
    Dyadic max_side_width() const { return max(re.width(), im.width()); }

    /// Widen both sides by t >= 0 in every direction.
    CRect inflate(const Dyadic& t) const;

    /// Enclosure of {|z| : z in rect}; sqrt rounding at p bits.
    DyInterval magnitude(int64_t p) const;
};

CRect operator+(const CRect& a, const CRect& b);
CRect operator-(const CRect& a, const CRect& b);
CRect operator*(const CRect& a, const CRect& b);
CRect operator-(const CRect& a);
CRect operator*(const CRect& a, const DyInterval& s);

/// Square box given by center and side width.  Subdivision keeps everything
/// square and exactly dyadic.
struct ComplexBox {
    ComplexDyadic center;
    Dyadic width;

    ComplexBox() = default;
    ComplexBox(ComplexDyadic c, Dyadic w);

    Dyadic half_width() const { return width.mul_pow2(-1); }
    CRect rect() const;
    bool contains(const ComplexDyadic& z) const;
    bool contains(const CRect& r) const { return rect().contains(r); }

    /// The square of width lambda*w at the same center (lambda > 0).
    ComplexBox scale(const Dyadic& lambda) const;

    /// Four children of width w/2, exactly tiling the box.
    /// Order: (-,-), (+,-), (-,+), (+,+) offsets, i.e. SW, SE, NW, NE.
    std::array<ComplexBox, 4> subdivide4() const;
};

struct Disc {
    ComplexDyadic center;
    Dyadic radius;

    Disc() = default;
    Disc(ComplexDyadic c, Dyadic r);

    Disc scale(const Dyadic& lambda) const { return Disc(center, radius * lambda); }
    /// Exact membership of a point: |z - c|^2 <= r^2.
    bool contains(const ComplexDyadic& z) const;
};

/// Dyadic upper bound on w/sqrt(2) within relative error 2^-20; w >= 0.
Dyadic radius_upper_of_width(const Dyadic& w);

/// radius_upper(B): the circumradius bound of the box.
Dyadic radius_upper(const ComplexBox& b);

/// D(B): smallest disc centered at m(B) containing B, with the dyadic
/// upper-bound radius.
Disc disc_of(const ComplexBox& b);

/// Dyadic upper bound on r*sqrt(2) (half-diagonal of the square of half-width
/// r), used as the Taylor tail radius for disc evaluations.
Dyadic half_diagonal_upper(const Dyadic& r);

/// Conflict test: |c1-c2| <= r1+r2, decided exactly on squares.
/// Tangency counts as a conflict.
bool discs_intersect(const Disc& a, const Disc& b);

}  // namespace rootclust

#endif
