#ifndef ROOTCLUST_APPROX_REAL_HPP
#define ROOTCLUST_APPROX_REAL_HPP

#include <atomic>
#include <functional>
#include <memory>

#include "rootclust/interval.hpp"

namespace rootclust {

/// An adaptive-precision enclosure source: refine(p) returns a dyadic interval
/// of width at most 2^(1-p) containing the represented real.  All enclosures
/// of one source contain the same value, so they pairwise intersect.
/// Refinement is re-entrant; bits_served tracks the largest p requested.
class ApproxReal {
public:
    using Fn = std::function<DyInterval(int64_t)>;

    explicit ApproxReal(Fn fn) : fn_(std::move(fn)) {}
    ApproxReal(const ApproxReal& o) : fn_(o.fn_), served_(o.served_.load()) {}
    ApproxReal& operator=(const ApproxReal& o) {
        fn_ = o.fn_;
        served_.store(o.served_.load());
        return *this;
    }

    DyInterval refine(int64_t p) const;
    int64_t bits_served() const { return served_.load(); }

    /// Source for an exactly known value: every refinement is the point.
    static ApproxReal exact(const Dyadic& v);

    /// Wraps a raw evaluator eval(q) that returns sound enclosures whose width
    /// shrinks like 2^-q, retrying with more working bits until the refine
    /// contract is met.
    static ApproxReal converging(std::function<DyInterval(int64_t)> eval);

private:
    Fn fn_;
    mutable std::atomic<int64_t> served_{0};
};

using ApproxRealPtr = std::shared_ptr<const ApproxReal>;

}  // namespace rootclust

#endif
