#include "rootclust/clusterer.hpp"

#include <chrono>
#include <future>

namespace rootclust {

namespace {

struct WorkItem {
    ComplexBox box;
    int depth;
};

std::vector<FirstCResult> run_level(const FuncExpr& f, const std::vector<WorkItem>& level,
                                    int64_t n0, const ClusterOptions& opts) {
    std::vector<FirstCResult> results(level.size());
    int threads = std::max(1, opts.threads);
    if (threads == 1 || level.size() < 2) {
        for (size_t i = 0; i < level.size(); ++i)
            results[i] = first_c(f, level[i].box, n0, opts.iteration_cap);
        return results;
    }
    size_t chunk = (level.size() + threads - 1) / threads;
    std::vector<std::future<void>> jobs;
    for (int t = 0; t < threads; ++t) {
        size_t begin = t * chunk;
        size_t end = std::min(level.size(), begin + chunk);
        if (begin >= end) break;
        jobs.push_back(std::async(std::launch::async, [&, begin, end] {
            for (size_t i = begin; i < end; ++i)
                results[i] = first_c(f, level[i].box, n0, opts.iteration_cap);
        }));
    }
    for (auto& j : jobs) j.get();
    return results;
}

}  // namespace

ClusterResult cluster(const FuncExpr& f, const ComplexBox& b0, int64_t n0,
                      const ClusterOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    ClusterResult out;
    SubdivisionStats& st = out.stats;

    std::vector<ComponentPair> candidates;
    std::vector<WorkItem> level{{b0, 0}};

    while (!level.empty()) {
        std::vector<FirstCResult> results = run_level(f, level, n0, opts);
        std::vector<WorkItem> next;
        for (size_t i = 0; i < level.size(); ++i) {
            const WorkItem& item = level[i];
            const FirstCResult& r = results[i];
            ++st.tree_size;
            st.max_depth = std::max(st.max_depth, item.depth);
            for (const PredicateEval& e : r.log) {
                st.call_log.push_back({item.depth, e.k, e.bits});
                st.max_bits = std::max(st.max_bits, e.bits);
                ++st.bits_histogram[e.bits];
            }
            auto note_leaf = [&] {
                if (!st.min_leaf_width || item.box.width < *st.min_leaf_width)
                    st.min_leaf_width = item.box.width;
            };
            switch (r.kind) {
                case FirstCKind::Exclude:
                    ++st.excluded;
                    note_leaf();
                    if (opts.keep_boxes)
                        out.boxes.push_back({item.box, item.depth, BoxStatus::Excluded, 0});
                    break;
                case FirstCKind::Include: {
                    ++st.included;
                    note_leaf();
                    ComplexBox scaled = item.box.scale(Dyadic(kC1 * r.k));
                    ComponentPair pair{item.box, r.k, disc_of(scaled), item.depth,
                                       static_cast<int64_t>(candidates.size())};
                    candidates.push_back(std::move(pair));
                    if (opts.keep_boxes)
                        out.boxes.push_back({item.box, item.depth, BoxStatus::Included, r.k});
                    break;
                }
                case FirstCKind::Unresolved: {
                    if (item.depth >= opts.max_depth)
                        throw DepthExceededError(
                            "subdivision exceeded depth " + std::to_string(opts.max_depth) +
                            " at box centered (" + item.box.center.re.to_decimal_string() + ", " +
                            item.box.center.im.to_decimal_string() +
                            ") width " + item.box.width.to_decimal_string() +
                            "; the root bound may be too small or a box function unsound");
                    ++st.split;
                    if (opts.keep_boxes)
                        out.boxes.push_back({item.box, item.depth, BoxStatus::Split, 0});
                    for (ComplexBox& child : item.box.subdivide4())
                        next.push_back({std::move(child), item.depth + 1});
                    break;
                }
            }
        }
        level = std::move(next);
    }

    // Conflict resolution: keep a candidate only if its disc avoids every
    // disc already accepted; discovery order makes the output deterministic.
    for (ComponentPair& c : candidates) {
        bool conflict = false;
        for (const ComponentPair& kept : out.system.pairs) {
            if (discs_intersect(c.disc, kept.disc)) {
                conflict = true;
                break;
            }
        }
        if (!conflict) out.system.pairs.push_back(std::move(c));
    }

    st.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

std::string to_string(BoxStatus s, int64_t k) {
    switch (s) {
        case BoxStatus::Excluded: return "excluded";
        case BoxStatus::Included: return "included:" + std::to_string(k);
        case BoxStatus::Split: return "split";
    }
    return "?";
}

}  // namespace rootclust
