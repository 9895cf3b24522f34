#ifndef ROOTCLUST_CLUSTERER_HPP
#define ROOTCLUST_CLUSTERER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rootclust/pellet.hpp"

namespace rootclust {

/// An accepted (B, k) pair: the disc is the smallest disc centered at m(B)
/// containing c1*k*B (dyadic upper-bound radius).
struct ComponentPair {
    ComplexBox box;
    int64_t k = 0;
    Disc disc;
    int depth = 0;
    int64_t discovery_index = 0;
};

struct IsolatingSystem {
    std::vector<ComponentPair> pairs;
};

struct BitLogEntry {
    int depth;
    int64_t k;
    int64_t bits;
};

struct SubdivisionStats {
    int64_t tree_size = 0;  // all boxes processed; 1 + 4 * split
    int64_t excluded = 0;
    int64_t included = 0;
    int64_t split = 0;
    int max_depth = 0;
    std::optional<Dyadic> min_leaf_width;
    int64_t max_bits = 0;
    std::map<int64_t, int64_t> bits_histogram;
    double wall_seconds = 0;        // informational; never serialized
    std::vector<BitLogEntry> call_log;  // (depth, k, bits) per predicate call
};

struct ClusterOptions {
    int max_depth = 64;
    int64_t iteration_cap = kDefaultIterationCap;
    int threads = 1;
    bool keep_boxes = false;  // retain per-box records for the tree dump
};

enum class BoxStatus { Excluded, Included, Split };

struct BoxRecord {
    ComplexBox box;
    int depth;
    BoxStatus status;
    int64_t k = 0;  // for Included
};

struct ClusterResult {
    IsolatingSystem system;
    SubdivisionStats stats;
    std::vector<BoxRecord> boxes;  // only when keep_boxes
};

/// The subdivision algorithm: breadth-first over Q0 with first_c deciding
/// exclude / include / split, then conflict resolution over the candidate
/// pairs in discovery order.  Identical inputs give bit-identical results for
/// any thread count.
ClusterResult cluster(const FuncExpr& f, const ComplexBox& b0, int64_t n0,
                      const ClusterOptions& opts = {});

std::string to_string(BoxStatus s, int64_t k);

}  // namespace rootclust

#endif
