#include "rootclust/bench.hpp"

#include <cmath>
#include <sstream>

#include "rootclust/verify.hpp"

namespace rootclust::bench {

Instance from_roots(const std::string& id,
                    const std::vector<std::pair<ComplexDyadic, int64_t>>& rts,
                    const ComplexBox& b0) {
    std::vector<ComplexDyadic> coeffs{ComplexDyadic(Dyadic(1), Dyadic())};
    Instance inst;
    for (const auto& [loc, mult] : rts) {
        for (int64_t i = 0; i < mult; ++i) {
            // multiply by (z - loc)
            std::vector<ComplexDyadic> next(coeffs.size() + 1);
            for (size_t j = 0; j < coeffs.size(); ++j) {
                next[j + 1] = next[j + 1] + coeffs[j];
                next[j] = next[j] - coeffs[j] * loc;
            }
            coeffs = std::move(next);
        }
        inst.roots.roots.push_back(RootEntry::at(loc, mult));
    }
    inst.id = id;
    inst.f = FuncExpr::poly(std::move(coeffs));
    inst.b0 = b0;
    inst.n0 = inst.roots.total_multiplicity();
    inst.has_roots = true;
    double m = 1;
    for (const auto& [loc, mult] : rts) {
        double a = std::sqrt(loc.norm().to_double());
        if (a > 1) m *= std::pow(a, static_cast<double>(mult));
    }
    inst.mahler = m;
    return inst;
}

FuncExpr poly_pow_minus(int64_t d, int64_t c) {
    std::vector<ComplexDyadic> coeffs(static_cast<size_t>(d) + 1);
    coeffs[0] = ComplexDyadic(Dyadic(-c), Dyadic());
    coeffs[static_cast<size_t>(d)] = ComplexDyadic(Dyadic(1), Dyadic());
    return FuncExpr::poly(std::move(coeffs));
}

namespace {

ComplexBox origin_square(int64_t width) {
    return ComplexBox(ComplexDyadic(), Dyadic(width));
}

}  // namespace

Instance instance_z_pow_minus_two(int64_t d) {
    Instance inst;
    inst.id = "z^" + std::to_string(d) + "-2";
    inst.f = poly_pow_minus(d, 2);
    inst.b0 = origin_square(8);  // 4 * ceil(M), M = 2
    inst.n0 = d;
    inst.mahler = 2;
    return inst;
}

Instance instance_prod_linear(int64_t d) {
    std::vector<std::pair<ComplexDyadic, int64_t>> rts;
    double m = 1;
    for (int64_t i = 1; i <= d; ++i) {
        rts.push_back({ComplexDyadic(Dyadic(i), Dyadic()), 1});
        if (i > 1) m *= static_cast<double>(i);
    }
    int64_t width = 4 * static_cast<int64_t>(std::ceil(m));
    Instance inst = from_roots("prod(z-i)_d=" + std::to_string(d), rts, origin_square(width));
    return inst;
}

Instance instance_cluster_pair(int64_t t) {
    ComplexDyadic a(Dyadic(1).mul_pow2(-2), Dyadic());
    ComplexDyadic b(Dyadic(1).mul_pow2(-2) + Dyadic(1).mul_pow2(-t), Dyadic());
    return from_roots("pair_t=" + std::to_string(t), {{a, 1}, {b, 1}}, origin_square(8));
}

std::vector<Instance> correctness_suite() {
    std::vector<Instance> suite;
    ComplexBox b0 = origin_square(8);
    suite.push_back(from_roots("z", {{ComplexDyadic(), 1}}, b0));
    {
        Instance i2;
        i2.id = "z^2-2";
        i2.f = poly_pow_minus(2, 2);
        i2.b0 = b0;
        i2.n0 = 2;
        i2.mahler = 2;
        DyInterval s2 = sqrt_enclosure(DyInterval(Dyadic(2)), 120);
        i2.roots.roots.push_back({CRect(s2, DyInterval(Dyadic())), 1});
        i2.roots.roots.push_back({CRect(-s2, DyInterval(Dyadic())), 1});
        i2.has_roots = true;
        suite.push_back(std::move(i2));
    }
    suite.push_back(from_roots("z^2(z-1)",
                               {{ComplexDyadic(), 2}, {ComplexDyadic(Dyadic(1), Dyadic()), 1}},
                               b0));
    suite.push_back(from_roots("(z-1)^3(z+1)",
                               {{ComplexDyadic(Dyadic(1), Dyadic()), 3},
                                {ComplexDyadic(Dyadic(-1), Dyadic()), 1}},
                               b0));
    suite.push_back(instance_prod_linear(5));
    suite.back().b0 = b0;  // the correctness run uses the common width-8 box
    for (int64_t t : {4, 6, 8, 10, 12}) suite.push_back(instance_cluster_pair(t));
    return suite;
}

std::vector<Instance> bounds_suite() {
    std::vector<Instance> suite;
    for (int64_t d : {2, 4, 8}) suite.push_back(instance_z_pow_minus_two(d));
    for (int64_t d : {3, 5}) suite.push_back(instance_prod_linear(d));
    return suite;
}

std::vector<Instance> exp_area_suite() {
    std::vector<Instance> suite;
    for (int64_t w : {2, 4, 8}) {
        Instance inst;
        inst.id = "exp_w=" + std::to_string(w);
        inst.f = FuncExpr::exp();
        inst.b0 = origin_square(w);
        inst.n0 = 0;
        suite.push_back(std::move(inst));
    }
    return suite;
}

std::vector<Instance> sin_halfplane_suite() {
    std::vector<Instance> suite;
    for (int64_t w : {4, 8}) {
        Instance inst;
        inst.id = "sin_w=" + std::to_string(w);
        inst.f = FuncExpr::sin();
        inst.b0 = ComplexBox(ComplexDyadic(Dyadic(), Dyadic(16)), Dyadic(w));
        inst.n0 = 0;
        suite.push_back(std::move(inst));
    }
    return suite;
}

std::vector<Instance> precision_suite() {
    std::vector<Instance> suite;
    for (int64_t t : {4, 6, 8, 10, 12}) suite.push_back(instance_cluster_pair(t));
    return suite;
}

namespace {

struct Row {
    std::string id;
    int64_t d = 0;
    double mahler = 0;
    double width = 0;
    int64_t tree_size = 0;
    int64_t max_bits = 0;
    double bound = 0;
    double ratio = 0;
};

std::string render_csv(const std::vector<Row>& rows) {
    std::ostringstream out;
    out << "instance,d,mahler,width,tree_size,max_bits,bound,ratio\n";
    for (const Row& r : rows) {
        out << r.id << ',' << r.d << ',' << r.mahler << ',' << r.width << ',' << r.tree_size
            << ',' << r.max_bits << ',' << r.bound << ',' << r.ratio << '\n';
    }
    return out.str();
}

void fail(SuiteOutcome& s, const std::string& why) {
    s.pass = false;
    s.failures.push_back(why);
}

SuiteOutcome run_poly_correctness() {
    SuiteOutcome s{"poly-correctness", true, {}, {}};
    std::vector<Row> rows;
    for (const Instance& inst : correctness_suite()) {
        ClusterResult res = cluster(inst.f, inst.b0, inst.n0);
        VerificationReport rep = verify_isolating_system(res.system, inst.roots, inst.b0);
        if (!rep.all_pass()) {
            std::string why = inst.id + ": ";
            for (const auto* cond :
                 {&rep.centers_in_b0, &rep.isolating, &rep.coverage, &rep.roots_in_2b0,
                  &rep.pairwise_disjoint})
                for (const auto& ce : cond->counterexamples) why += ce + "; ";
            fail(s, why);
        }
        rows.push_back({inst.id, inst.f.degree(), inst.mahler, inst.b0.width.to_double(),
                        res.stats.tree_size, res.stats.max_bits, 0, 0});
    }
    s.csv = render_csv(rows);
    return s;
}

SuiteOutcome run_poly_bounds() {
    constexpr double kTreeConstant = 64;
    SuiteOutcome s{"poly-bounds", true, {}, {}};
    std::vector<Row> rows;
    for (const Instance& inst : bounds_suite()) {
        ClusterResult res = cluster(inst.f, inst.b0, inst.n0);
        double d = static_cast<double>(inst.f.degree());
        double bound = d * d * std::log2(inst.mahler) + d * d * d;
        double limit = kTreeConstant * bound;
        if (static_cast<double>(res.stats.tree_size) > limit)
            fail(s, inst.id + ": tree_size " + std::to_string(res.stats.tree_size) +
                        " exceeds 64*(d^2 log M + d^3) = " + std::to_string(limit));
        rows.push_back({inst.id, inst.f.degree(), inst.mahler, inst.b0.width.to_double(),
                        res.stats.tree_size, res.stats.max_bits, bound,
                        static_cast<double>(res.stats.tree_size) / bound});
    }
    s.csv = render_csv(rows);
    return s;
}

// Shared by the exp and sin suites: pure-exclusion run with a leaf-radius
// window and an area-law ratio check on consecutive widths.
SuiteOutcome run_exclusion_suite(const std::string& name, std::vector<Instance> suite,
                                 bool check_quarter) {
    SuiteOutcome s{name, true, {}, {}};
    std::vector<Row> rows;
    std::vector<int64_t> sizes;
    Dyadic two(2);
    Dyadic quarter = Dyadic(1).mul_pow2(-2);
    for (const Instance& inst : suite) {
        ClusterOptions opts;
        opts.keep_boxes = true;
        ClusterResult res = cluster(inst.f, inst.b0, inst.n0, opts);
        if (!res.system.pairs.empty() || res.stats.included != 0)
            fail(s, inst.id + ": expected a pure exclusion run");
        bool some_coarse = false;
        for (const BoxRecord& b : res.boxes) {
            if (b.status != BoxStatus::Excluded) continue;
            Dyadic r = radius_upper(b.box);
            if (!(r < two)) fail(s, inst.id + ": excluded leaf with radius_upper >= 2");
            if (r > quarter) some_coarse = true;
        }
        if (check_quarter && !some_coarse)
            fail(s, inst.id + ": no excluded leaf with radius_upper > 1/4");
        sizes.push_back(res.stats.tree_size);
        rows.push_back({inst.id, 0, 0, inst.b0.width.to_double(), res.stats.tree_size,
                        res.stats.max_bits, 0, 0});
    }
    for (size_t i = 1; i < sizes.size(); ++i) {
        double ratio = static_cast<double>(sizes[i]) / static_cast<double>(sizes[i - 1]);
        rows[i].ratio = ratio;
        if (ratio < 3.0 || ratio > 5.0)
            fail(s, suite[i].id + ": area-law ratio " + std::to_string(ratio) +
                        " outside [3, 5]");
    }
    s.csv = render_csv(rows);
    return s;
}

SuiteOutcome run_precision_scaling() {
    constexpr int64_t kBitsPerT = 32;
    SuiteOutcome s{"precision-scaling", true, {}, {}};
    std::vector<Row> rows;
    int64_t prev_bits = 0;
    std::vector<int64_t> ts{4, 6, 8, 10, 12};
    auto suite = precision_suite();
    for (size_t i = 0; i < suite.size(); ++i) {
        const Instance& inst = suite[i];
        int64_t t = ts[i];
        ClusterResult res = cluster(inst.f, inst.b0, inst.n0);
        if (res.stats.max_bits < prev_bits)
            fail(s, inst.id + ": max_bits decreased from " + std::to_string(prev_bits));
        if (res.stats.max_bits > kBitsPerT * t)
            fail(s, inst.id + ": max_bits " + std::to_string(res.stats.max_bits) + " exceeds " +
                        std::to_string(kBitsPerT * t));
        prev_bits = res.stats.max_bits;
        rows.push_back({inst.id, 2, inst.mahler, inst.b0.width.to_double(), res.stats.tree_size,
                        res.stats.max_bits, static_cast<double>(kBitsPerT * t),
                        static_cast<double>(res.stats.max_bits) / static_cast<double>(t)});
    }
    s.csv = render_csv(rows);
    return s;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"poly-correctness", "poly-bounds", "exp-area",
                                                "sin-halfplane", "precision-scaling"};
    return names;
}

SuiteOutcome run_suite(const std::string& name) {
    if (name == "poly-correctness") return run_poly_correctness();
    if (name == "poly-bounds") return run_poly_bounds();
    if (name == "exp-area") return run_exclusion_suite("exp-area", exp_area_suite(), true);
    if (name == "sin-halfplane")
        return run_exclusion_suite("sin-halfplane", sin_halfplane_suite(), false);
    if (name == "precision-scaling") return run_precision_scaling();
    throw Error("unknown bench suite '" + name + "'");
}

}  // namespace rootclust::bench
