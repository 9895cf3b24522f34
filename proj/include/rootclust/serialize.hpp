#ifndef ROOTCLUST_SERIALIZE_HPP
#define ROOTCLUST_SERIALIZE_HPP

#include <json.hpp>
#include <optional>
#include <string>

#include "rootclust/analysis.hpp"
#include "rootclust/clusterer.hpp"
#include "rootclust/verify.hpp"

namespace rootclust {

using Json = nlohmann::json;  // key-sorted object type keeps output deterministic

// Dyadics travel as {"m": "<decimal mantissa>", "e": <exponent>} plus a
// deterministic 17-digit "display" convenience field that parsers ignore.
Json to_json(const Dyadic& d);
Dyadic dyadic_from_json(const Json& j);

Json to_json(const DyInterval& v);
DyInterval interval_from_json(const Json& j);

Json to_json(const ComplexDyadic& z);
ComplexDyadic complex_from_json(const Json& j);

Json to_json(const ComplexBox& b);
ComplexBox box_from_json(const Json& j);

Json to_json(const FuncExpr& f);
FuncExpr func_from_json(const Json& j);

/// Roots file: {"roots": [{"re": <dyadic or {"lo","hi"}>, "im": ..., "mult": n}, ...]}
RootSet roots_from_json(const Json& j);
Json to_json(const RootSet& r);

struct InstanceOptions {
    std::optional<int> max_depth;
    std::optional<int> threads;
    std::optional<std::string> dump_tree;
};

struct InstanceSpec {
    FuncExpr function;
    ComplexBox box{ComplexDyadic(), Dyadic(1)};
    int64_t n0 = 0;
    InstanceOptions options;
};

InstanceSpec instance_from_json(const Json& j);
Json to_json(const InstanceSpec& spec);

Json stats_to_json(const SubdivisionStats& st);
Json system_to_json(const IsolatingSystem& sys);
Json verification_to_json(const VerificationReport& rep);
Json cluster_geometry_to_json(const ClusterGeometry& g);
Json theory_to_json(const TheoryBounds& tb);

/// One row per processed box: center, width, depth, status.
std::string tree_dump_csv(const std::vector<BoxRecord>& boxes);

}  // namespace rootclust

#endif
