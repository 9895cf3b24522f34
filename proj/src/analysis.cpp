#include "rootclust/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "rootclust/elementary.hpp"

namespace rootclust {

RectPoly RectPoly::from(const FuncExpr& f) {
    if (!f.is_poly()) throw Error("RectPoly::from needs a polynomial");
    RectPoly g;
    g.coeffs.reserve(f.coeffs.size());
    for (const auto& c : f.coeffs) g.coeffs.emplace_back(c);
    return g;
}

RectPoly RectPoly::times_linear(const CRect& alpha) const {
    RectPoly r;
    r.coeffs.assign(coeffs.size() + 1, CRect());
    for (size_t i = 0; i < coeffs.size(); ++i) {
        r.coeffs[i + 1] = r.coeffs[i + 1] + coeffs[i];
        r.coeffs[i] = r.coeffs[i] - coeffs[i] * alpha;
    }
    return r;
}

CRect rect_poly_fk(const RectPoly& g, uint64_t k, const CRect& z) {
    uint64_t d = static_cast<uint64_t>(g.degree());
    if (k > d) return CRect();
    CRect acc;
    for (uint64_t i = d;; --i) {
        DyInterval binom(Dyadic(binomial(i, k), 0));
        acc = acc * z + g.coeffs[i] * binom;
        if (i == k) break;
    }
    return acc;
}

DyInterval gamma_rect_poly(const RectPoly& g, const CRect& z, int64_t p) {
    int64_t d = g.degree();
    DyInterval f0 = rect_poly_fk(g, 0, z).magnitude(p + 8);
    if (f0.lo.sign() <= 0)
        throw ZeroDenominatorError("gamma: |f(z)| enclosure touches zero at precision " +
                                   std::to_string(p));
    DyInterval inv = recip_enclosure(f0, p + 8);
    DyInterval best;  // gamma >= 0; starts at [0,0]
    for (int64_t k = 1; k <= d; ++k) {
        DyInterval fk = rect_poly_fk(g, static_cast<uint64_t>(k), z).magnitude(p + 8);
        DyInterval ratio = fk * inv;
        DyInterval rk = kth_root_enclosure(ratio, static_cast<uint64_t>(k), p + 4);
        best = DyInterval(max(best.lo, rk.lo), max(best.hi, rk.hi));
    }
    return best;
}

DyInterval gamma_poly(const FuncExpr& f, const ComplexDyadic& z, int64_t p) {
    if (!f.is_poly()) throw Error("gamma_poly needs a polynomial");
    return gamma_rect_poly(RectPoly::from(f), CRect(z), p);
}

DyInterval s_f(const RootSet& roots, const CRect& z, int64_t p) {
    DyInterval sum;
    for (const RootEntry& r : roots.roots) {
        CRect diff(z.re - r.location.re, z.im - r.location.im);
        DyInterval dist = diff.magnitude(p + 8);
        if (dist.lo.sign() <= 0)
            throw ZeroDistanceError("S_f: evaluation point meets a root enclosure");
        DyInterval inv = recip_enclosure(dist, p + 8);
        sum = sum + inv * Dyadic(r.multiplicity);
    }
    return sum;
}

DyInterval mahler(const FuncExpr& f, const RootSet& roots, int64_t p) {
    if (!f.is_poly()) throw Error("Mahler measure needs a polynomial");
    const ComplexDyadic& lc = f.coeffs.back();
    if (!(lc.re == Dyadic(1) && lc.im.is_zero()))
        throw AnalysisError("Mahler measure requires a monic polynomial");
    DyInterval prod(Dyadic(1));
    Dyadic one(1);
    for (const RootEntry& r : roots.roots) {
        DyInterval mag = r.location.magnitude(p + 8);
        if (mag.hi <= one) continue;
        if (mag.lo <= one)
            throw AmbiguousBoundaryError("Mahler: a root magnitude enclosure straddles 1");
        for (int64_t i = 0; i < r.multiplicity; ++i) prod = prod * mag;
    }
    return prod;
}

DyInterval c0_enclosure(int64_t q) {
    DyInterval e = e_enclosure(q + 8);
    return ((e * e) * Dyadic(1).mul_pow2(17)).round_out(q);
}

namespace {

CRect centroid_of(const RootSet& roots, const std::vector<size_t>& members, int64_t size,
                  int64_t p) {
    if (members.size() == 1) return roots.roots[members[0]].location;
    CRect sum;
    for (size_t idx : members) {
        const RootEntry& r = roots.roots[idx];
        DyInterval mult(Dyadic(r.multiplicity));
        sum = sum + r.location * mult;
    }
    return sum * recip_integer(BigInt(size), p + 8);
}

// Enclosure of max_i |loc_i - c|.
DyInterval max_dist(const RootSet& roots, const std::vector<size_t>& members, const CRect& c,
                    int64_t p) {
    DyInterval best;
    for (size_t idx : members) {
        CRect diff(roots.roots[idx].location.re - c.re, roots.roots[idx].location.im - c.im);
        DyInterval d = diff.magnitude(p + 8);
        best = DyInterval(max(best.lo, d.lo), max(best.hi, d.hi));
    }
    return best;
}

enum class Tri { True, False, Ambiguous };

Tri leq(const DyInterval& a, const DyInterval& b) {
    if (a.hi <= b.lo) return Tri::True;
    if (a.lo > b.hi) return Tri::False;
    return Tri::Ambiguous;
}

ClusterGeometry geometry_at_precision(const RootSet& roots, const std::vector<size_t>& members,
                                      int64_t p, Tri& verdict) {
    ClusterGeometry g;
    g.members = members;
    for (size_t idx : members) g.size += roots.roots[idx].multiplicity;
    g.centroid = centroid_of(roots, members, g.size, p);
    g.r_c = members.size() == 1 ? DyInterval() : max_dist(roots, members, g.centroid, p);

    std::vector<size_t> outside;
    for (size_t i = 0; i < roots.roots.size(); ++i)
        if (std::find(members.begin(), members.end(), i) == members.end()) outside.push_back(i);

    if (outside.empty()) {
        g.sigma_infinite = true;
        g.gamma_zero = true;
        g.r_cap_infinite = true;
        g.strongly_separated = true;
        verdict = Tri::True;
        return g;
    }

    DyInterval smin;
    bool first = true;
    RectPoly h = RectPoly::constant(CRect(ComplexDyadic(Dyadic(1), Dyadic())));
    for (size_t idx : outside) {
        const RootEntry& r = roots.roots[idx];
        CRect diff(g.centroid.re - r.location.re, g.centroid.im - r.location.im);
        DyInterval d = diff.magnitude(p + 8);
        if (d.lo.sign() <= 0)
            throw ZeroDenominatorError("cluster centroid meets an outside root enclosure");
        smin = first ? d : DyInterval(min(smin.lo, d.lo), min(smin.hi, d.hi));
        first = false;
        for (int64_t m = 0; m < r.multiplicity; ++m) h = h.times_linear(r.location);
    }
    g.sigma_c = smin;

    g.gamma_c = gamma_rect_poly(h, g.centroid, p);
    if (g.gamma_c.lo.sign() <= 0) {
        verdict = Tri::Ambiguous;  // too coarse to bound R_C; retry higher
        return g;
    }
    DyInterval c0 = c0_enclosure(p + 8);
    g.r_cap = recip_enclosure(c0 * g.gamma_c, p + 8) * Dyadic(g.size);
    BigInt cube = BigInt(g.size) * g.size * g.size;
    g.d_c_radius = g.r_cap * recip_integer(cube, p + 8);

    if (g.r_c.hi.is_zero()) {
        g.strongly_separated = true;
        verdict = Tri::True;
        return g;
    }
    Tri t = leq(g.r_c, g.r_cap * recip_integer(cube * 8, p + 8));
    g.strongly_separated = t == Tri::True;
    verdict = t;
    return g;
}

}  // namespace

ClusterGeometry cluster_geometry(const RootSet& roots, std::vector<size_t> members, int64_t p) {
    if (members.empty()) throw Error("cluster must be nonempty");
    std::sort(members.begin(), members.end());
    for (int64_t q = p; q <= 4096; q *= 2) {
        Tri verdict = Tri::Ambiguous;
        ClusterGeometry g = geometry_at_precision(roots, members, q, verdict);
        if (verdict != Tri::Ambiguous) return g;
    }
    throw AmbiguousBoundaryError("strong-separation test undecidable at 4096 bits");
}

std::vector<ClusterGeometry> build_s0(const RootSet& roots, const ComplexBox& b0, int64_t p) {
    ComplexBox b2 = b0.scale(Dyadic(2));
    std::vector<size_t> inside;
    int64_t total = 0;
    for (size_t i = 0; i < roots.roots.size(); ++i) {
        Containment c = root_in_box(roots.roots[i].location, b2);
        if (c == Containment::Ambiguous)
            throw AmbiguousBoundaryError("a root enclosure straddles the 2B0 boundary");
        if (c == Containment::Inside) {
            inside.push_back(i);
            total += roots.roots[i].multiplicity;
        }
    }
    if (total > 12) throw TooManyRootsError("more than 12 roots in 2B0");

    std::vector<std::vector<size_t>> parts;
    for (size_t idx : inside) parts.push_back({idx});

    // Exact squared centroid distance of two parts, for the deterministic
    // merge order.  Uses enclosure midpoints scaled to stay dyadic.
    auto part_centroid2 = [&](const std::vector<size_t>& part) {
        Dyadic re, im;
        int64_t n = 0;
        for (size_t idx : part) {
            const RootEntry& r = roots.roots[idx];
            Dyadic m(r.multiplicity);
            re += (r.location.re.lo + r.location.re.hi) * m;
            im += (r.location.im.lo + r.location.im.hi) * m;
            n += r.multiplicity;
        }
        // centroid*2n times n stays exact: compare cross-multiplied below.
        return std::tuple<Dyadic, Dyadic, int64_t>(re, im, n);
    };
    auto pair_dist2_key = [&](size_t a, size_t b) {
        auto [ra, ia, na] = part_centroid2(parts[a]);
        auto [rb, ib, nb] = part_centroid2(parts[b]);
        // (ra/na - rb/nb)^2 + ... scaled by (na*nb)^2, exact dyadic.
        Dyadic dr = ra * Dyadic(nb) - rb * Dyadic(na);
        Dyadic di = ia * Dyadic(nb) - ib * Dyadic(na);
        Dyadic scale2 = (Dyadic(na) * Dyadic(nb)).pow(2);
        // Normalize by comparing dr^2+di^2 against scale2-weighted keys: store
        // both and compare as a fraction via cross multiplication.
        return std::pair<Dyadic, Dyadic>(dr * dr + di * di, scale2);
    };

    bool merged = true;
    while (merged && parts.size() > 1) {
        merged = false;
        // Candidate pairs ordered by centroid distance, then index.
        std::vector<std::pair<size_t, size_t>> cands;
        for (size_t i = 0; i < parts.size(); ++i)
            for (size_t j = i + 1; j < parts.size(); ++j) cands.push_back({i, j});
        std::stable_sort(cands.begin(), cands.end(), [&](auto lhs, auto rhs) {
            auto [n1, d1] = pair_dist2_key(lhs.first, lhs.second);
            auto [n2, d2] = pair_dist2_key(rhs.first, rhs.second);
            return n1 * d2 < n2 * d1;  // n1/d1 < n2/d2
        });
        for (auto [i, j] : cands) {
            std::vector<size_t> u = parts[i];
            u.insert(u.end(), parts[j].begin(), parts[j].end());
            std::sort(u.begin(), u.end());
            if (u.size() == roots.roots.size()) continue;  // degenerate all-roots merge
            ClusterGeometry g = cluster_geometry(roots, u, p);
            if (g.strongly_separated) {
                parts[i] = std::move(u);
                parts.erase(parts.begin() + static_cast<ptrdiff_t>(j));
                merged = true;
                break;
            }
        }
    }

    std::sort(parts.begin(), parts.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    std::vector<ClusterGeometry> out;
    out.reserve(parts.size());
    for (auto& part : parts) out.push_back(cluster_geometry(roots, part, p));
    return out;
}

double omin(double x) { return std::min(1.0, x); }

namespace {

double interval_mid(const DyInterval& v) {
    return (v.lo.to_double() + v.hi.to_double()) / 2;
}

}  // namespace

TheoryBounds predicted_bounds(const FuncExpr& f, const RootSet& roots, const ComplexBox& b0,
                              const std::vector<ClusterGeometry>& s0, int64_t p) {
    if (!f.is_poly()) throw Error("predicted bounds are polynomial-only");
    TheoryBounds tb;
    double d = static_cast<double>(f.degree());
    double w = b0.width.to_double();

    double sigma_term = 0;  // sum |C| log2 sigma_C over clusters with finite sigma
    double min_fc = 1;      // omin over clusters of |f_|C|(m_C)|
    for (const ClusterGeometry& g : s0) {
        if (!g.sigma_infinite)
            sigma_term += static_cast<double>(g.size) * std::log2(interval_mid(g.sigma_c));
        ComplexDyadic mc((g.centroid.re.lo + g.centroid.re.hi).mul_pow2(-1),
                         (g.centroid.im.lo + g.centroid.im.hi).mul_pow2(-1));
        CRect fc = eval_fk_point(f, static_cast<uint64_t>(g.size), mc, p);
        min_fc = std::min(min_fc, interval_mid(fc.magnitude(p)));
    }

    tb.tree_bound = d * d * std::log2(w) + d * d * std::log2(d) - d * sigma_term;

    try {
        DyInterval m = mahler(f, roots, p);
        tb.has_mahler = true;
        tb.mahler_measure = interval_mid(m);
        tb.intpoly_bound = d * d * std::log2(tb.mahler_measure) + d * d * d;
        double r_b0 = radius_upper_of_width(b0.width).to_double();
        tb.precision_bound = d * d * d * std::log2(std::max(tb.mahler_measure, 1.0)) -
                             d * d * std::log2(omin(r_b0)) - d * sigma_term -
                             d * std::log2(omin(min_fc));
    } catch (const AnalysisError&) {
        tb.has_mahler = false;
    }
    return tb;
}

}  // namespace rootclust
