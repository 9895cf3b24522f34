#ifndef ROOTCLUST_VERIFY_HPP
#define ROOTCLUST_VERIFY_HPP

#include <string>

#include "rootclust/clusterer.hpp"
#include "rootclust/roots.hpp"

namespace rootclust {

struct ConditionReport {
    bool pass = true;
    std::vector<std::string> counterexamples;
};

/// The local root-clustering output conditions, checked against ground truth:
///   1. disc centers lie in B0
///   2. each disc D and 3D contain the same multiset of exactly k roots
///   3. every root in B0 is covered by some disc
///   4. every root inside any disc lies in 2 B0
///   5. discs are pairwise disjoint
struct VerificationReport {
    ConditionReport centers_in_b0;
    ConditionReport isolating;
    ConditionReport coverage;
    ConditionReport roots_in_2b0;
    ConditionReport pairwise_disjoint;

    bool all_pass() const {
        return centers_in_b0.pass && isolating.pass && coverage.pass && roots_in_2b0.pass &&
               pairwise_disjoint.pass;
    }
};

VerificationReport verify_isolating_system(const IsolatingSystem& sys, const RootSet& roots,
                                           const ComplexBox& b0);

}  // namespace rootclust

#endif
