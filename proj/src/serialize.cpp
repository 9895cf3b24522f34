#include "rootclust/serialize.hpp"

#include <sstream>

namespace rootclust {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError("malformed input: " + what); }

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) bad(std::string("missing field '") + name + "'");
    return j.at(name);
}

int64_t int_field(const Json& j, const char* name) {
    const Json& v = field(j, name);
    if (!v.is_number_integer()) bad(std::string("field '") + name + "' must be an integer");
    return v.get<int64_t>();
}

}  // namespace

Json to_json(const Dyadic& d) {
    Json j;
    j["m"] = d.mantissa().str();
    j["e"] = d.exponent();
    j["display"] = d.to_decimal_string();
    return j;
}

Dyadic dyadic_from_json(const Json& j) {
    if (j.is_number_integer()) return Dyadic(j.get<int64_t>());
    const Json& m = field(j, "m");
    if (!m.is_string()) bad("dyadic mantissa must be a decimal string");
    int64_t e = int_field(j, "e");
    try {
        return Dyadic(BigInt(m.get<std::string>()), e);
    } catch (const std::exception&) {
        bad("unparsable dyadic mantissa '" + m.get<std::string>() + "'");
    }
}

Json to_json(const DyInterval& v) {
    Json j;
    j["lo"] = to_json(v.lo);
    j["hi"] = to_json(v.hi);
    return j;
}

DyInterval interval_from_json(const Json& j) {
    if (j.is_object() && j.contains("lo"))
        return DyInterval(dyadic_from_json(field(j, "lo")), dyadic_from_json(field(j, "hi")));
    Dyadic point = dyadic_from_json(j);
    return DyInterval(point);
}

Json to_json(const ComplexDyadic& z) {
    Json j;
    j["re"] = to_json(z.re);
    j["im"] = to_json(z.im);
    return j;
}

ComplexDyadic complex_from_json(const Json& j) {
    return ComplexDyadic(dyadic_from_json(field(j, "re")), dyadic_from_json(field(j, "im")));
}

Json to_json(const ComplexBox& b) {
    Json j;
    j["center"] = Json::array({to_json(b.center.re), to_json(b.center.im)});
    j["width"] = to_json(b.width);
    return j;
}

ComplexBox box_from_json(const Json& j) {
    const Json& c = field(j, "center");
    if (!c.is_array() || c.size() != 2) bad("box center must be a [re, im] pair");
    Dyadic w = dyadic_from_json(field(j, "width"));
    if (w.sign() <= 0) bad("box width must be positive");
    return ComplexBox(ComplexDyadic(dyadic_from_json(c[0]), dyadic_from_json(c[1])), w);
}

Json to_json(const FuncExpr& f) {
    Json j;
    switch (f.kind) {
        case FuncExpr::Kind::Exp:
            j["type"] = "exp";
            break;
        case FuncExpr::Kind::Sin:
            j["type"] = "sin";
            break;
        case FuncExpr::Kind::Poly: {
            j["type"] = "poly";
            Json arr = Json::array();
            for (const auto& c : f.coeffs) arr.push_back(to_json(c));
            j["coeffs"] = arr;
            break;
        }
    }
    return j;
}

FuncExpr func_from_json(const Json& j) {
    const Json& t = field(j, "type");
    if (!t.is_string()) bad("function type must be a string");
    std::string type = t.get<std::string>();
    if (type == "exp") return FuncExpr::exp();
    if (type == "sin") return FuncExpr::sin();
    if (type == "poly") {
        const Json& arr = field(j, "coeffs");
        if (!arr.is_array() || arr.empty()) bad("poly coeffs must be a nonempty array");
        std::vector<ComplexDyadic> coeffs;
        for (const Json& c : arr) coeffs.push_back(complex_from_json(c));
        try {
            return FuncExpr::poly(std::move(coeffs));
        } catch (const Error& e) {
            bad(e.what());
        }
    }
    bad("unknown function type '" + type + "'");
}

RootSet roots_from_json(const Json& j) {
    const Json& arr = field(j, "roots");
    if (!arr.is_array()) bad("roots must be an array");
    RootSet rs;
    for (const Json& r : arr) {
        RootEntry entry;
        entry.location =
            CRect(interval_from_json(field(r, "re")), interval_from_json(field(r, "im")));
        entry.multiplicity = r.contains("mult") ? int_field(r, "mult") : 1;
        if (entry.multiplicity < 1) bad("root multiplicity must be >= 1");
        rs.roots.push_back(std::move(entry));
    }
    return rs;
}

Json to_json(const RootSet& r) {
    Json arr = Json::array();
    for (const auto& e : r.roots) {
        Json one;
        one["re"] = to_json(e.location.re);
        one["im"] = to_json(e.location.im);
        one["mult"] = e.multiplicity;
        arr.push_back(one);
    }
    Json j;
    j["roots"] = arr;
    return j;
}

InstanceSpec instance_from_json(const Json& j) {
    InstanceSpec spec;
    spec.function = func_from_json(field(j, "function"));
    spec.box = box_from_json(field(j, "box"));
    spec.n0 = int_field(j, "n0");
    if (spec.n0 < 0) bad("n0 must be nonnegative");
    if (j.contains("options")) {
        const Json& o = j.at("options");
        if (o.contains("max_depth")) spec.options.max_depth = static_cast<int>(int_field(o, "max_depth"));
        if (o.contains("threads")) spec.options.threads = static_cast<int>(int_field(o, "threads"));
        if (o.contains("dump_tree")) spec.options.dump_tree = o.at("dump_tree").get<std::string>();
    }
    return spec;
}

Json to_json(const InstanceSpec& spec) {
    Json j;
    j["function"] = to_json(spec.function);
    j["box"] = to_json(spec.box);
    j["n0"] = spec.n0;
    Json o = Json::object();
    if (spec.options.max_depth) o["max_depth"] = *spec.options.max_depth;
    if (spec.options.threads) o["threads"] = *spec.options.threads;
    if (spec.options.dump_tree) o["dump_tree"] = *spec.options.dump_tree;
    if (!o.empty()) j["options"] = o;
    return j;
}

Json stats_to_json(const SubdivisionStats& st) {
    Json j;
    j["tree_size"] = st.tree_size;
    Json leaves;
    leaves["excluded"] = st.excluded;
    leaves["included"] = st.included;
    leaves["split"] = st.split;
    j["leaf_counts"] = leaves;
    j["max_depth"] = st.max_depth;
    j["min_leaf_width"] = st.min_leaf_width ? to_json(*st.min_leaf_width) : Json();
    j["max_bits"] = st.max_bits;
    Json hist = Json::object();
    for (const auto& [bits, count] : st.bits_histogram) hist[std::to_string(bits)] = count;
    j["bits_histogram"] = hist;
    return j;
}

Json system_to_json(const IsolatingSystem& sys) {
    Json arr = Json::array();
    for (const ComponentPair& p : sys.pairs) {
        Json one;
        one["center"] = to_json(p.disc.center);
        one["radius"] = to_json(p.disc.radius);
        one["k"] = p.k;
        one["depth"] = p.depth;
        one["discovery_index"] = p.discovery_index;
        arr.push_back(one);
    }
    return arr;
}

namespace {

Json condition_to_json(const ConditionReport& c) {
    Json j;
    j["pass"] = c.pass;
    j["counterexamples"] = c.counterexamples;
    return j;
}

}  // namespace

Json verification_to_json(const VerificationReport& rep) {
    Json j;
    j["centers_in_b0"] = condition_to_json(rep.centers_in_b0);
    j["isolating"] = condition_to_json(rep.isolating);
    j["coverage"] = condition_to_json(rep.coverage);
    j["roots_in_2b0"] = condition_to_json(rep.roots_in_2b0);
    j["pairwise_disjoint"] = condition_to_json(rep.pairwise_disjoint);
    j["all_pass"] = rep.all_pass();
    return j;
}

Json cluster_geometry_to_json(const ClusterGeometry& g) {
    Json j;
    j["members"] = g.members;
    j["size"] = g.size;
    Json c;
    c["re"] = to_json(g.centroid.re);
    c["im"] = to_json(g.centroid.im);
    j["centroid"] = c;
    j["r_c"] = to_json(g.r_c);
    j["sigma_c"] = g.sigma_infinite ? Json("inf") : to_json(g.sigma_c);
    j["gamma_c"] = g.gamma_zero ? Json(0) : to_json(g.gamma_c);
    j["R_c"] = g.r_cap_infinite ? Json("inf") : to_json(g.r_cap);
    j["d_c_radius"] = g.r_cap_infinite ? Json("inf") : to_json(g.d_c_radius);
    j["strongly_separated"] = g.strongly_separated;
    return j;
}

Json theory_to_json(const TheoryBounds& tb) {
    Json j;
    j["tree_bound"] = tb.tree_bound;
    if (tb.has_mahler) {
        j["intpoly_bound"] = tb.intpoly_bound;
        j["precision_bound"] = tb.precision_bound;
        j["mahler"] = tb.mahler_measure;
    }
    return j;
}

std::string tree_dump_csv(const std::vector<BoxRecord>& boxes) {
    std::ostringstream out;
    out << "center_re,center_im,width,depth,status\n";
    for (const BoxRecord& b : boxes) {
        out << b.box.center.re.to_decimal_string() << ',' << b.box.center.im.to_decimal_string()
            << ',' << b.box.width.to_decimal_string() << ',' << b.depth << ','
            << to_string(b.status, b.k) << '\n';
    }
    return out.str();
}

}  // namespace rootclust
