#ifndef ROOTCLUST_PELLET_HPP
#define ROOTCLUST_PELLET_HPP

#include <vector>

#include "rootclust/function.hpp"
#include "rootclust/soft_compare.hpp"

namespace rootclust {

/// Dyadic stand-in for the scaling constant 32e: the smallest integer above
/// it.  Any value in [32e, 3*32e] preserves the detection guarantees, and an
/// integer keeps scaled boxes exactly dyadic.
inline constexpr int64_t kC1 = 87;

/// Exclusion-test constant 2^7: points z with kC3 * gamma(f,z) * r <= 1 are
/// guaranteed to be excluded.
inline constexpr int64_t kC3 = 128;

struct CTildeOutcome {
    bool holds;
    int64_t bits_used;
};

/// Effective Pellet predicate on the disc D(m,r):
///   SoftCompare(|f_k(m)| r^k,
///               sum_{i<k} |f_i(m)| r^i + |box f_{k+1}(D(m,r))| r^(k+1)) > 0.
/// Only a certified Positive counts; Negative and RelativelyClose fail.
CTildeOutcome c_tilde_k(const FuncExpr& f, const ComplexDyadic& m, const Dyadic& r,
                        uint64_t k, int64_t iteration_cap = kDefaultIterationCap);

enum class FirstCKind { Exclude, Include, Unresolved };

struct PredicateEval {
    int64_t k;
    int scaling;  // 1 for the c1*k box, 3 for the 3*c1*k box
    int64_t bits;
};

struct FirstCResult {
    FirstCKind kind = FirstCKind::Unresolved;
    int64_t k = -1;  // set for Include
    int64_t bits_used = 0;
    int64_t predicates_tried = 0;
    std::vector<PredicateEval> log;
};

/// Root counting on scaled versions of B: the smallest k <= N0 such that the
/// predicate holds on both max{1, c1 k} B and max{1, 3 c1 k} B.  k = 0 means
/// the box is free of roots; no such k means the box must be subdivided.
FirstCResult first_c(const FuncExpr& f, const ComplexBox& b, int64_t n0,
                     int64_t iteration_cap = kDefaultIterationCap);

}  // namespace rootclust

#endif
