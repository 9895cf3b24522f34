#include "rootclust/pellet.hpp"

#include "rootclust/elementary.hpp"

namespace rootclust {

namespace {

// Guard bits so that a (k+2)-term assembled sum still meets the 2^(1-p)
// refinement contract: 4 + ceil(log2(k+2)) plus headroom for the exact r^i
// factors' magnitude.
int64_t guard_bits(uint64_t k, const Dyadic& max_factor) {
    int64_t g = 4;
    uint64_t n = k + 2;
    while (n > 1) {
        ++g;
        n >>= 1;
    }
    return g + std::max<int64_t>(0, max_factor.mag2_upper());
}

}  // namespace

CTildeOutcome c_tilde_k(const FuncExpr& f, const ComplexDyadic& m, const Dyadic& r,
                        uint64_t k, int64_t iteration_cap) {
    if (r.sign() <= 0) throw Error("predicate disc radius must be positive");

    // r^i powers are exact dyadics.
    std::vector<Dyadic> rpow(k + 2);
    rpow[0] = Dyadic(1);
    for (uint64_t i = 1; i <= k + 1; ++i) rpow[i] = rpow[i - 1] * r;

    Dyadic rk = rpow[k];
    auto left = ApproxReal::converging([f, k, m, rk](int64_t q) {
        CRect v = eval_fk_point(f, k, m, q);
        return (v.magnitude(q + 2) * rk).round_out(q);
    });

    Disc d(m, r);
    auto right = ApproxReal::converging([f, k, m, d, rpow](int64_t q) {
        DyInterval sum;
        for (uint64_t i = 0; i < k; ++i) {
            CRect v = eval_fk_point(f, i, m, q);
            sum = sum + v.magnitude(q + 2) * rpow[i];
        }
        sum = sum + box_magnitude(f, k + 1, d, q) * rpow[k + 1];
        return sum.round_out(q);
    });

    // Both sides are nonnegative sums of up to k+2 coefficient terms; pad the
    // working precision so their assembly still meets the width contract.
    Dyadic max_factor = max(rpow[k], rpow[k + 1]);
    int64_t g = guard_bits(k, max_factor);
    // Trim mantissas well below the contract width so the padding cannot
    // blur a decision the raw enclosure would have made.
    auto pad = [g](ApproxReal inner) {
        return ApproxReal([inner = std::move(inner), g](int64_t p) {
            return inner.refine(p + g).round_out(p + g + 2);
        });
    };

    SoftInterval I = SoftInterval::point(std::make_shared<ApproxReal>(pad(std::move(left))));
    SoftInterval J = SoftInterval::point(std::make_shared<ApproxReal>(pad(std::move(right))));
    SoftOutcome out = soft_compare(I, J, iteration_cap);
    return {out.verdict == SoftVerdict::Positive, out.bits_used};
}

namespace {

CTildeOutcome c_tilde_on_scaled(const FuncExpr& f, const ComplexBox& b, uint64_t k,
                                int64_t scale, int64_t iteration_cap) {
    ComplexBox sb = scale == 1 ? b : b.scale(Dyadic(scale));
    Disc d = disc_of(sb);
    return c_tilde_k(f, d.center, d.radius, k, iteration_cap);
}

}  // namespace

FirstCResult first_c(const FuncExpr& f, const ComplexBox& b, int64_t n0,
                     int64_t iteration_cap) {
    if (n0 < 0) throw Error("root count bound must be nonnegative");
    FirstCResult res;
    for (int64_t k = 0; k <= n0; ++k) {
        int64_t s1 = std::max<int64_t>(1, kC1 * k);
        int64_t s2 = std::max<int64_t>(1, 3 * kC1 * k);
        CTildeOutcome first = c_tilde_on_scaled(f, b, k, s1, iteration_cap);
        ++res.predicates_tried;
        res.bits_used = std::max(res.bits_used, first.bits_used);
        res.log.push_back({k, 1, first.bits_used});
        if (!first.holds) continue;
        if (s2 != s1) {
            CTildeOutcome second = c_tilde_on_scaled(f, b, k, s2, iteration_cap);
            ++res.predicates_tried;
            res.bits_used = std::max(res.bits_used, second.bits_used);
            res.log.push_back({k, 3, second.bits_used});
            if (!second.holds) continue;
        }
        res.kind = k == 0 ? FirstCKind::Exclude : FirstCKind::Include;
        res.k = k;
        return res;
    }
    res.kind = FirstCKind::Unresolved;
    return res;
}

}  // namespace rootclust
