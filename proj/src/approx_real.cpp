#include "rootclust/approx_real.hpp"

namespace rootclust {

DyInterval ApproxReal::refine(int64_t p) const {
    if (p < 1) throw Error("refinement precision must be >= 1");
    DyInterval I = fn_(p);
    if (I.width() > Dyadic::pow2(1 - p))
        throw Error("enclosure source violated its width contract at p=" + std::to_string(p));
    int64_t seen = served_.load();
    while (seen < p && !served_.compare_exchange_weak(seen, p)) {
    }
    return I;
}

ApproxReal ApproxReal::exact(const Dyadic& v) {
    return ApproxReal([v](int64_t) { return DyInterval(v); });
}

ApproxReal ApproxReal::converging(std::function<DyInterval(int64_t)> eval) {
    return ApproxReal([eval = std::move(eval)](int64_t p) {
        Dyadic target = Dyadic::pow2(1 - p);
        int64_t extra = 4;
        for (int round = 0; round < 48; ++round) {
            DyInterval I = eval(p + extra);
            if (I.width() <= target) return I;
            extra *= 2;
        }
        throw Error("enclosure failed to converge to the requested width");
    });
}

}  // namespace rootclust
