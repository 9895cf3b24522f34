#ifndef ROOTCLUST_FUNCTION_HPP
#define ROOTCLUST_FUNCTION_HPP

#include <vector>

#include "rootclust/geometry.hpp"

namespace rootclust {

/// A holomorphic function given as a polynomial, the exponential, or the
/// sine.  All three are entire, so every box is inside the domain.
struct FuncExpr {
    enum class Kind { Poly, Exp, Sin };

    Kind kind = Kind::Exp;
    std::vector<ComplexDyadic> coeffs;  // Poly only; coeffs[i] multiplies z^i

    static FuncExpr poly(std::vector<ComplexDyadic> c);
    static FuncExpr exp() { return FuncExpr{Kind::Exp, {}}; }
    static FuncExpr sin() { return FuncExpr{Kind::Sin, {}}; }

    bool is_poly() const { return kind == Kind::Poly; }
    /// Polynomial degree; throws for exp/sin.
    int64_t degree() const;
};

/// CoeffEnclosure: a complex rectangle known to contain f_k = f^(k)/k!
/// evaluated at a point or over a box.
using CoeffEnclosure = CRect;

/// Rectangle containing f_k(m), both side widths <= 2^-p.  For polynomials
/// the value is an exact Taylor-shift coefficient and the rectangle is a
/// point.
CoeffEnclosure eval_fk_point(const FuncExpr& f, uint64_t k, const ComplexDyadic& m, int64_t p);

/// Interval enclosing the tail magnitude
///   T*(f,k,D) = sum_{j>=1} C(k+j,j) |f_{k+j}(m)| rho^j,   rho = half-diagonal bound,
/// which dominates sup |f_k(z) - f_k(m)| over the box of half-width r at m.
/// Finite exact sum for Poly; e^Re(m)(e^rho - 1)/k! for Exp;
/// cosh(Im m)(e^rho - 1)/k! for Sin.  Width shrinks like 2^-q.
DyInterval tail_magnitude(const FuncExpr& f, uint64_t k, const Disc& d, int64_t q);

/// Rectangle containing f_k(z) for every z in the axis-aligned box of
/// half-width r around m (hence for all z in D(m,r)).
CoeffEnclosure eval_fk_box(const FuncExpr& f, uint64_t k, const Disc& d, int64_t p);

/// Enclosure of the fixed reference value U*(f,k,D) = |f_k(m)| + T*, an
/// upper bound on sup |f_k| over the evaluation box that the predicate
/// oracles refine to arbitrary precision.
DyInterval box_magnitude(const FuncExpr& f, uint64_t k, const Disc& d, int64_t q);

/// [lo, hi] with lo <= sup |f_k| over the evaluation box <= hi, computed from
/// the eval_fk_box rectangle: hi from the far corners, lo from the rectangle's
/// distance to the origin.
DyInterval magnitude_upper(const FuncExpr& f, uint64_t k, const Disc& d, int64_t p);

}  // namespace rootclust

#endif
