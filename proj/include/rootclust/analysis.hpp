#ifndef ROOTCLUST_ANALYSIS_HPP
#define ROOTCLUST_ANALYSIS_HPP

#include <optional>

#include "rootclust/function.hpp"
#include "rootclust/roots.hpp"

namespace rootclust {

/// Polynomial with rectangle coefficients; cofactors of enclosed roots live
/// here.
struct RectPoly {
    std::vector<CRect> coeffs;  // coeffs[i] multiplies z^i; nonempty

    int64_t degree() const { return static_cast<int64_t>(coeffs.size()) - 1; }
    static RectPoly constant(const CRect& c) { return RectPoly{{c}}; }
    static RectPoly from(const FuncExpr& f);
    /// Multiply by (z - alpha).
    RectPoly times_linear(const CRect& alpha) const;
};

/// Normalized Taylor coefficient g_k(z) of a rectangle polynomial, exact
/// interval arithmetic (binomial Taylor shift).
CRect rect_poly_fk(const RectPoly& g, uint64_t k, const CRect& z);

/// Enclosure of max_{1<=k<=d} |g_k(z)/g(z)|^(1/k).  Throws ZeroDenominator if
/// the enclosure of g(z) contains zero at this precision.
DyInterval gamma_rect_poly(const RectPoly& g, const CRect& z, int64_t p);

/// Local nonlinearity of a polynomial at a dyadic point.
DyInterval gamma_poly(const FuncExpr& f, const ComplexDyadic& z, int64_t p);

/// sum over roots (with multiplicity) of 1/|z - alpha|.
DyInterval s_f(const RootSet& roots, const CRect& z, int64_t p);

/// Product of |alpha| over roots of magnitude > 1, multiplicity-weighted;
/// requires a monic polynomial.  AmbiguousBoundary when some |alpha|
/// enclosure straddles 1.
DyInterval mahler(const FuncExpr& f, const RootSet& roots, int64_t p);

/// Geometry of one cluster of roots: centroid, enclosing radius from the
/// centroid, distance to the nearest outside root, the cofactor's gamma at
/// the centroid, the detection radius R_C = |C| / (c0 gamma_C(m_C)) with
/// c0 = 2^17 e^2, and the strong-separation verdict r_C <= R_C / (8 |C|^3).
struct ClusterGeometry {
    std::vector<size_t> members;  // indices into the RootSet, ascending
    int64_t size = 0;             // |C| with multiplicity

    CRect centroid;
    DyInterval r_c;
    bool sigma_infinite = false;
    DyInterval sigma_c;
    bool gamma_zero = false;  // constant cofactor: gamma = 0, R_C infinite
    DyInterval gamma_c;
    bool r_cap_infinite = false;
    DyInterval r_cap;        // R_C
    DyInterval d_c_radius;   // R_C / |C|^3
    bool strongly_separated = false;
};

ClusterGeometry cluster_geometry(const RootSet& roots, std::vector<size_t> members,
                                 int64_t p = 80);

/// Maximal strongly separated clusters partitioning the roots inside 2 B0:
/// agglomerative merging on centroid distance with a strong-separation
/// re-check, run to pairwise-merge closure.  Merges that would swallow every
/// root of f are degenerate (constant cofactor) and are not candidates.
/// Throws TooManyRoots above 12 roots counted with multiplicity.
std::vector<ClusterGeometry> build_s0(const RootSet& roots, const ComplexBox& b0,
                                      int64_t p = 80);

/// Enclosure of c0 = 2^17 e^2.
DyInterval c0_enclosure(int64_t q);

struct TheoryBounds {
    double tree_bound = 0;       // d^2 log w(B0) + d^2 log d - d sum |C| log sigma_C
    double intpoly_bound = 0;    // d^2 log M(f) + d^3
    double precision_bound = 0;  // d^3 log M - d^2 log omin(r_B0) - d sum |C| log sigma_C
                                 //   - d log omin_C |f_|C|(m_C)|
    bool has_mahler = false;
    double mahler_measure = 0;
};

TheoryBounds predicted_bounds(const FuncExpr& f, const RootSet& roots, const ComplexBox& b0,
                              const std::vector<ClusterGeometry>& s0, int64_t p = 80);

/// min(1, x); its log2 never contributes a positive term.
double omin(double x);

}  // namespace rootclust

#endif
