#include "rootclust/soft_compare.hpp"

namespace rootclust {

SoftInterval SoftInterval::exact_point(const Dyadic& v) {
    return point(std::make_shared<ApproxReal>(ApproxReal::exact(v)));
}

SoftInterval SoftInterval::exact(const DyInterval& iv) {
    return {std::make_shared<ApproxReal>(ApproxReal::exact(iv.lo)),
            std::make_shared<ApproxReal>(ApproxReal::exact(iv.hi))};
}

DyInterval SoftInterval::outer(int64_t p) const {
    Dyadic g = Dyadic::pow2(-p);
    Dyadic a = lo->refine(p).lo.round_nearest(p) - g;
    Dyadic b = hi->refine(p).hi.round_nearest(p) + g;
    // The exact endpoints sit strictly inside [a, b] by construction.
    return DyInterval(a, max(a, b));
}

SoftOutcome soft_compare(const SoftInterval& I, const SoftInterval& J, int64_t iteration_cap) {
    for (int64_t p = 1;; p *= 2) {
        if (p > iteration_cap) throw IterationCapError(iteration_cap);
        DyInterval Ip = I.outer(p);
        DyInterval Jp = J.outer(p);
        // True values lie in the open interiors, so touching outer enclosures
        // still certify a strict sign.
        if (Ip.lo >= Jp.hi) return {SoftVerdict::Positive, p};
        if (Jp.lo >= Ip.hi) return {SoftVerdict::Negative, p};
        if (!Ip.contains_zero() || !Jp.contains_zero())
            return {SoftVerdict::RelativelyClose, p};
    }
}

}  // namespace rootclust
