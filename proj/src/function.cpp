#include "rootclust/function.hpp"

#include "rootclust/elementary.hpp"

namespace rootclust {

FuncExpr FuncExpr::poly(std::vector<ComplexDyadic> c) {
    while (c.size() > 1 && c.back().is_zero()) c.pop_back();
    if (c.empty() || c.back().is_zero())
        throw Error("polynomial must have a nonzero leading coefficient");
    return FuncExpr{Kind::Poly, std::move(c)};
}

int64_t FuncExpr::degree() const {
    if (!is_poly()) throw Error("degree of a non-polynomial");
    return static_cast<int64_t>(coeffs.size()) - 1;
}

namespace {

// Exact normalized Taylor coefficient of a polynomial:
//   f_k(m) = sum_{i=k}^{d} C(i,k) c_i m^(i-k).
ComplexDyadic poly_fk_exact(const std::vector<ComplexDyadic>& c, uint64_t k,
                            const ComplexDyadic& m) {
    uint64_t d = c.size() - 1;
    if (k > d) return ComplexDyadic();
    // Horner in m over i = d .. k.
    ComplexDyadic acc;
    for (uint64_t i = d;; --i) {
        ComplexDyadic term = c[i];
        Dyadic binom(binomial(i, k), 0);
        term = ComplexDyadic(term.re * binom, term.im * binom);
        acc = acc * m + term;
        if (i == k) break;
    }
    return acc;
}

CRect complex_exp_rect(const ComplexDyadic& m, int64_t q) {
    DyInterval ex = exp_point(m.re, q);
    DyInterval c = cos_point(m.im, q);
    DyInterval s = sin_point(m.im, q);
    return CRect(ex * c, ex * s);
}

// sin(x+iy) = sin x cosh y + i cos x sinh y,
// cos(x+iy) = cos x cosh y - i sin x sinh y.
CRect complex_sin_rect(const ComplexDyadic& m, int64_t q) {
    return CRect(sin_point(m.re, q) * cosh_point(m.im, q),
                 cos_point(m.re, q) * sinh_point(m.im, q));
}

CRect complex_cos_rect(const ComplexDyadic& m, int64_t q) {
    return CRect(cos_point(m.re, q) * cosh_point(m.im, q),
                 -(sin_point(m.re, q) * sinh_point(m.im, q)));
}

// Raw evaluation at working precision q; the widths shrink like 2^-q but are
// not clamped to a target here.
CRect eval_fk_raw(const FuncExpr& f, uint64_t k, const ComplexDyadic& m, int64_t q) {
    switch (f.kind) {
        case FuncExpr::Kind::Poly:
            return CRect(poly_fk_exact(f.coeffs, k, m));
        case FuncExpr::Kind::Exp:
            return complex_exp_rect(m, q) * recip_factorial(k, q);
        case FuncExpr::Kind::Sin: {
            CRect base;
            switch (k % 4) {
                case 0: base = complex_sin_rect(m, q); break;
                case 1: base = complex_cos_rect(m, q); break;
                case 2: base = -complex_sin_rect(m, q); break;
                default: base = -complex_cos_rect(m, q); break;
            }
            return base * recip_factorial(k, q);
        }
    }
    throw Error("unreachable function kind");
}

}  // namespace

CoeffEnclosure eval_fk_point(const FuncExpr& f, uint64_t k, const ComplexDyadic& m, int64_t p) {
    if (p < 1) throw Error("evaluation precision must be >= 1");
    if (f.is_poly()) return eval_fk_raw(f, k, m, p);
    Dyadic target = Dyadic::pow2(-p);
    int64_t extra = 4;
    for (int round = 0; round < 48; ++round) {
        CRect r = eval_fk_raw(f, k, m, p + extra);
        if (r.max_side_width() <= target) return r;
        extra *= 2;
    }
    throw Error("coefficient evaluation failed to reach the requested width");
}

DyInterval tail_magnitude(const FuncExpr& f, uint64_t k, const Disc& d, int64_t q) {
    Dyadic rho = half_diagonal_upper(d.radius);
    switch (f.kind) {
        case FuncExpr::Kind::Poly: {
            uint64_t deg = f.coeffs.size() - 1;
            DyInterval sum;  // [0,0]
            if (k >= deg) return sum;
            Dyadic rho_pow(1);
            for (uint64_t j = 1; j + k <= deg; ++j) {
                rho_pow *= rho;
                CRect cj(poly_fk_exact(f.coeffs, k + j, d.center));
                DyInterval mag = cj.magnitude(q + 8);
                Dyadic w(binomial(k + j, j), 0);
                sum = sum + mag * (w * rho_pow);
            }
            return sum;
        }
        case FuncExpr::Kind::Exp:
            return (exp_point(d.center.re, q + 8) * expm1_point(rho, q + 8) *
                    recip_factorial(k, q + 8))
                .round_out(q + 4);
        case FuncExpr::Kind::Sin:
            return (cosh_point(d.center.im, q + 8) * expm1_point(rho, q + 8) *
                    recip_factorial(k, q + 8))
                .round_out(q + 4);
    }
    throw Error("unreachable function kind");
}

CoeffEnclosure eval_fk_box(const FuncExpr& f, uint64_t k, const Disc& d, int64_t p) {
    if (p < 1) throw Error("evaluation precision must be >= 1");
    CRect ctr = eval_fk_point(f, k, d.center, p + 2);
    if (d.radius.is_zero()) return ctr;
    DyInterval t = tail_magnitude(f, k, d, p + 2);
    return ctr.inflate(t.hi);
}

DyInterval box_magnitude(const FuncExpr& f, uint64_t k, const Disc& d, int64_t q) {
    CRect ctr = eval_fk_raw(f, k, d.center, q + 6);
    DyInterval t = d.radius.is_zero() ? DyInterval() : tail_magnitude(f, k, d, q + 6);
    if (t.lo.sign() < 0) t.lo = Dyadic();
    // |f_k(m)| + T dominates sup |f_k| over the whole evaluation box and is
    // free of the rectangle's corner overestimate.
    return ctr.magnitude(q + 4) + t;
}

DyInterval magnitude_upper(const FuncExpr& f, uint64_t k, const Disc& d, int64_t p) {
    CRect r = eval_fk_box(f, k, d, p);
    return r.magnitude(p + 2);
}

}  // namespace rootclust
