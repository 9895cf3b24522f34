#include "rootclust/verify.hpp"

namespace rootclust {

Containment root_in_disc(const CRect& root, const Disc& d) {
    DyInterval dx = root.re - DyInterval(d.center.re);
    DyInterval dy = root.im - DyInterval(d.center.im);
    DyInterval n = dx * dx + dy * dy;
    Dyadic r2 = d.radius * d.radius;
    if (n.hi <= r2) return Containment::Inside;
    if (n.lo > r2) return Containment::Outside;
    return Containment::Ambiguous;
}

Containment root_in_box(const CRect& root, const ComplexBox& b) {
    CRect box = b.rect();
    if (box.contains(root)) return Containment::Inside;
    if (!box.intersects(root)) return Containment::Outside;
    return Containment::Ambiguous;
}

namespace {

std::string describe(const CRect& root) {
    return "(" + root.re.lo.to_decimal_string() + ", " + root.im.lo.to_decimal_string() + ")";
}

std::string describe(const Disc& d) {
    return "disc((" + d.center.re.to_decimal_string() + ", " + d.center.im.to_decimal_string() +
           "), r=" + d.radius.to_decimal_string() + ")";
}

}  // namespace

VerificationReport verify_isolating_system(const IsolatingSystem& sys, const RootSet& roots,
                                           const ComplexBox& b0) {
    VerificationReport rep;
    ComplexBox b0x2 = b0.scale(Dyadic(2));

    for (const ComponentPair& p : sys.pairs) {
        if (!b0.contains(p.disc.center)) {
            rep.centers_in_b0.pass = false;
            rep.centers_in_b0.counterexamples.push_back(describe(p.disc) + " center outside B0");
        }
    }

    // Isolating: D and 3D hold the same roots and their multiplicities sum to k.
    for (const ComponentPair& p : sys.pairs) {
        Disc d3 = p.disc.scale(Dyadic(3));
        int64_t count_in = 0;
        bool same = true, ambiguous = false;
        for (const RootEntry& r : roots.roots) {
            Containment in1 = root_in_disc(r.location, p.disc);
            Containment in3 = root_in_disc(r.location, d3);
            if (in1 == Containment::Ambiguous || in3 == Containment::Ambiguous) {
                ambiguous = true;
                break;
            }
            if (in1 == Containment::Inside) count_in += r.multiplicity;
            if (in1 != in3) same = false;
        }
        if (ambiguous) {
            rep.isolating.pass = false;
            rep.isolating.counterexamples.push_back(describe(p.disc) +
                                                    " has a root enclosure on its boundary");
        } else if (!same || count_in != p.k) {
            rep.isolating.pass = false;
            rep.isolating.counterexamples.push_back(
                describe(p.disc) + " claims k=" + std::to_string(p.k) + " but D holds " +
                std::to_string(count_in) + (same ? "" : " and 3D differs"));
        }
    }

    for (const RootEntry& r : roots.roots) {
        Containment in_b0 = root_in_box(r.location, b0);
        if (in_b0 == Containment::Outside) continue;
        bool covered = false;
        for (const ComponentPair& p : sys.pairs)
            if (root_in_disc(r.location, p.disc) == Containment::Inside) {
                covered = true;
                break;
            }
        if (!covered) {
            rep.coverage.pass = false;
            rep.coverage.counterexamples.push_back("root " + describe(r.location) +
                                                   (in_b0 == Containment::Ambiguous
                                                        ? " (on the B0 boundary) uncovered"
                                                        : " in B0 uncovered"));
        }
    }

    for (const ComponentPair& p : sys.pairs) {
        for (const RootEntry& r : roots.roots) {
            if (root_in_disc(r.location, p.disc) != Containment::Inside) continue;
            if (root_in_box(r.location, b0x2) != Containment::Inside) {
                rep.roots_in_2b0.pass = false;
                rep.roots_in_2b0.counterexamples.push_back("root " + describe(r.location) +
                                                           " of " + describe(p.disc) +
                                                           " escapes 2B0");
            }
        }
    }

    for (size_t i = 0; i < sys.pairs.size(); ++i)
        for (size_t j = i + 1; j < sys.pairs.size(); ++j)
            if (discs_intersect(sys.pairs[i].disc, sys.pairs[j].disc)) {
                rep.pairwise_disjoint.pass = false;
                rep.pairwise_disjoint.counterexamples.push_back(
                    describe(sys.pairs[i].disc) + " conflicts with " + describe(sys.pairs[j].disc));
            }

    return rep;
}

}  // namespace rootclust
