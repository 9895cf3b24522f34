#include "rootclust/run.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

#include "rootclust/bench.hpp"

namespace rootclust {

namespace {

ClusterOptions merge_options(const InstanceSpec& spec, const CmdOverrides& ov, bool keep_boxes) {
    ClusterOptions opts;
    if (spec.options.max_depth) opts.max_depth = *spec.options.max_depth;
    if (spec.options.threads) opts.threads = *spec.options.threads;
    if (ov.max_depth) opts.max_depth = *ov.max_depth;
    if (ov.iteration_cap) opts.iteration_cap = *ov.iteration_cap;
    if (ov.threads) opts.threads = *ov.threads;
    opts.keep_boxes = keep_boxes;
    return opts;
}

Json error_json(const std::string& type, const std::string& message) {
    Json e;
    e["type"] = type;
    e["message"] = message;
    return e;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json parse_json_file(const std::string& path) {
    try {
        return Json::parse(read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + path + "'");
    out << content;
}

}  // namespace

RunOutcome run_cluster_instance(const InstanceSpec& spec, const CmdOverrides& ov) {
    RunOutcome out;
    std::optional<std::string> dump = ov.dump_tree ? ov.dump_tree : spec.options.dump_tree;
    ClusterOptions opts = merge_options(spec, ov, dump.has_value());

    Json report;
    report["instance"] = to_json(spec);
    try {
        ClusterResult res = cluster(spec.function, spec.box, spec.n0, opts);
        report["isolating_system"] = system_to_json(res.system);
        report["stats"] = stats_to_json(res.stats);
        if (dump) {
            out.tree_csv = tree_dump_csv(res.boxes);
            out.tree_csv_path = *dump;
        }
        if (ov.roots_path) {
            RootSet roots = roots_from_json(parse_json_file(*ov.roots_path));
            report["verification"] =
                verification_to_json(verify_isolating_system(res.system, roots, spec.box));
        }
    } catch (const DepthExceededError& e) {
        report["error"] = error_json("depth_exceeded", e.what());
        out.exit_code = 2;
    } catch (const IterationCapError& e) {
        report["error"] = error_json("iteration_cap", e.what());
        out.exit_code = 2;
    }
    out.report = std::move(report);
    return out;
}

RunOutcome run_analyze_instance(const InstanceSpec& spec, const RootSet& roots,
                                const CmdOverrides& ov) {
    RunOutcome out;
    Json report;
    report["instance"] = to_json(spec);
    try {
        if (spec.function.is_poly() &&
            roots.total_multiplicity() != spec.function.degree())
            throw AnalysisError("root multiplicities do not sum to the polynomial degree");

        std::vector<ClusterGeometry> s0 = build_s0(roots, spec.box);
        Json s0_json = Json::array();
        for (const ClusterGeometry& g : s0) s0_json.push_back(cluster_geometry_to_json(g));
        report["s0"] = s0_json;

        if (spec.function.is_poly()) {
            TheoryBounds tb = predicted_bounds(spec.function, roots, spec.box, s0);
            report["theory"] = theory_to_json(tb);

            ClusterResult res = cluster(spec.function, spec.box, spec.n0,
                                        merge_options(spec, ov, false));
            report["stats"] = stats_to_json(res.stats);
            report["isolating_system"] = system_to_json(res.system);
            Json ratios;
            if (tb.tree_bound > 0)
                ratios["tree_size_vs_tree_bound"] =
                    static_cast<double>(res.stats.tree_size) / tb.tree_bound;
            if (tb.has_mahler && tb.precision_bound > 0)
                ratios["max_bits_vs_precision_bound"] =
                    static_cast<double>(res.stats.max_bits) / tb.precision_bound;
            report["ratios"] = ratios;
        }
    } catch (const AnalysisError& e) {
        report["error"] = error_json("analysis", e.what());
        out.exit_code = 2;
    } catch (const DepthExceededError& e) {
        report["error"] = error_json("depth_exceeded", e.what());
        out.exit_code = 2;
    } catch (const IterationCapError& e) {
        report["error"] = error_json("iteration_cap", e.what());
        out.exit_code = 2;
    }
    out.report = std::move(report);
    return out;
}

int cmd_cluster(const std::string& input_path, const std::string& output_path,
                const CmdOverrides& ov) {
    InstanceSpec spec;
    try {
        spec = instance_from_json(parse_json_file(input_path));
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    RunOutcome out;
    try {
        out = run_cluster_instance(spec, ov);
    } catch (const ParseError& e) {  // roots file problems
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    write_file(output_path, out.report.dump(2) + "\n");
    if (out.tree_csv) write_file(*out.tree_csv_path, *out.tree_csv);
    if (out.exit_code != 0)
        std::cerr << "error: " << out.report["error"]["message"].get<std::string>() << "\n";
    return out.exit_code;
}

int cmd_analyze(const std::string& input_path, const std::string& roots_path,
                const std::string& output_path, const CmdOverrides& ov) {
    InstanceSpec spec;
    RootSet roots;
    try {
        spec = instance_from_json(parse_json_file(input_path));
        roots = roots_from_json(parse_json_file(roots_path));
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    RunOutcome out = run_analyze_instance(spec, roots, ov);
    write_file(output_path, out.report.dump(2) + "\n");
    if (out.exit_code != 0)
        std::cerr << "error: " << out.report["error"]["message"].get<std::string>() << "\n";
    return out.exit_code;
}

int cmd_bench(const std::string& suite, const std::string& output_dir) {
    const auto& names = bench::suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) {
        std::cerr << "error: unknown suite '" << suite << "'\n";
        return 1;
    }
    std::filesystem::create_directories(output_dir);
    bench::SuiteOutcome res = bench::run_suite(suite);
    write_file(output_dir + "/" + suite + ".csv", res.csv);
    std::ostringstream summary;
    summary << (res.pass ? "PASS" : "FAIL") << " " << res.name << "\n";
    for (const std::string& f : res.failures) summary << "  " << f << "\n";
    write_file(output_dir + "/" + suite + ".summary.txt", summary.str());
    std::cout << summary.str();
    return res.pass ? 0 : 3;
}

}  // namespace rootclust
