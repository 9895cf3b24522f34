#ifndef ROOTCLUST_ROOTS_HPP
#define ROOTCLUST_ROOTS_HPP

#include <vector>

#include "rootclust/geometry.hpp"

namespace rootclust {

/// Ground-truth root of a test instance: a tight complex enclosure plus its
/// multiplicity.  Exact dyadic roots are point rectangles.
struct RootEntry {
    CRect location;
    int64_t multiplicity = 1;

    static RootEntry at(const ComplexDyadic& z, int64_t mult = 1) {
        return {CRect(z), mult};
    }
};

struct RootSet {
    std::vector<RootEntry> roots;

    int64_t total_multiplicity() const {
        int64_t n = 0;
        for (const auto& r : roots) n += r.multiplicity;
        return n;
    }
};

/// Three-valued geometric tests on enclosures.  Ambiguous means the enclosure
/// straddles the boundary at the available precision.
enum class Containment { Inside, Outside, Ambiguous };

Containment root_in_disc(const CRect& root, const Disc& d);
Containment root_in_box(const CRect& root, const ComplexBox& b);

}  // namespace rootclust

#endif
