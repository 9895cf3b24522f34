#ifndef ROOTCLUST_BENCH_HPP
#define ROOTCLUST_BENCH_HPP

#include <string>
#include <vector>

#include "rootclust/clusterer.hpp"
#include "rootclust/roots.hpp"

namespace rootclust::bench {

/// A named experiment: function, box, root bound, and (when closed-form)
/// ground-truth roots and the Mahler measure.
struct Instance {
    std::string id;
    FuncExpr f;
    ComplexBox b0{ComplexDyadic(), Dyadic(1)};
    int64_t n0 = 0;
    RootSet roots;
    bool has_roots = false;
    double mahler = 0;  // 0 when not applicable
};

/// Monic polynomial with the given dyadic roots (exact expansion) plus the
/// matching RootSet.
Instance from_roots(const std::string& id, const std::vector<std::pair<ComplexDyadic, int64_t>>& rts,
                    const ComplexBox& b0);

FuncExpr poly_pow_minus(int64_t d, int64_t c);          // z^d - c
Instance instance_z_pow_minus_two(int64_t d);           // on square(0, 4*ceil(M))
Instance instance_prod_linear(int64_t d);               // prod_{i=1..d} (z-i)
Instance instance_cluster_pair(int64_t t);              // (z-1/4)(z-1/4-2^-t) on square(0,8)

std::vector<Instance> correctness_suite();   // square(0,8), N0 = degree
std::vector<Instance> bounds_suite();
std::vector<Instance> exp_area_suite();      // widths 2,4,8, N0 = 0
std::vector<Instance> sin_halfplane_suite(); // center (0,16), widths 4,8
std::vector<Instance> precision_suite();     // cluster pairs, t = 4..12

struct SuiteOutcome {
    std::string name;
    bool pass = true;
    std::vector<std::string> failures;
    std::string csv;  // instance id, d, mahler, width, tree_size, max_bits, bound, ratio
};

const std::vector<std::string>& suite_names();
SuiteOutcome run_suite(const std::string& name);

}  // namespace rootclust::bench

#endif
