#ifndef ROOTCLUST_SOFT_COMPARE_HPP
#define ROOTCLUST_SOFT_COMPARE_HPP

#include "rootclust/approx_real.hpp"

namespace rootclust {

enum class SoftVerdict { Positive, Negative, RelativelyClose };

struct SoftOutcome {
    SoftVerdict verdict;
    int64_t bits_used;  // final p reached on the doubling schedule 1,2,4,...
};

/// An interval quantity fed to the soft zero test: a pair of enclosure
/// sources for its endpoints (aliased for point values).
struct SoftInterval {
    ApproxRealPtr lo, hi;

    static SoftInterval point(ApproxRealPtr v) { return {v, v}; }
    static SoftInterval exact_point(const Dyadic& v);
    static SoftInterval exact(const DyInterval& iv);

    /// (I)_p: refine both endpoints, round them to p bits, widen by 2^-p.
    DyInterval outer(int64_t p) const;
};

inline constexpr int64_t kDefaultIterationCap = int64_t(1) << 20;

/// Adaptive-precision comparison of two interval quantities, at least one of
/// which excludes zero (caller's obligation).  Returns the certified sign of
/// I - J, or RelativelyClose when the outer enclosures overlap while one of
/// them excludes the origin.  Precision doubles from p = 1; exceeding the cap
/// raises IterationCapError.
SoftOutcome soft_compare(const SoftInterval& I, const SoftInterval& J,
                         int64_t iteration_cap = kDefaultIterationCap);

}  // namespace rootclust

#endif
