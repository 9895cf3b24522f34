#include <CLI11.hpp>
#include <iostream>

#include "rootclust/run.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Root clustering for polynomials, exp and sin with exact dyadic"
                 " interval arithmetic and subdivision instrumentation"};
    app.require_subcommand(1);

    std::string input, output = "report.json", roots, dump_tree, suite, outdir = "bench-out";
    int max_depth = -1, threads = -1;
    int64_t iteration_cap = -1;

    rootclust::CmdOverrides ov;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--input", input, "instance JSON file")->required();
        cmd->add_option("--output", output, "report JSON file");
        cmd->add_option("--max-depth", max_depth, "subdivision depth limit");
        cmd->add_option("--iteration-cap", iteration_cap, "soft comparison bit cap");
        cmd->add_option("--threads", threads, "worker threads for the subdivision phase");
    };

    CLI::App* cl = app.add_subcommand("cluster", "run the clustering algorithm");
    add_common(cl);
    cl->add_option("--roots", roots, "ground-truth roots JSON for verification");
    cl->add_option("--dump-tree", dump_tree, "write a per-box CSV of the subdivision tree");

    CLI::App* an = app.add_subcommand("analyze", "cluster geometries, S0 and predicted bounds");
    add_common(an);
    an->add_option("--roots", roots, "ground-truth roots JSON")->required();

    CLI::App* be = app.add_subcommand("bench", "run an acceptance experiment suite");
    be->add_option("suite", suite, "one of: poly-correctness, poly-bounds, exp-area,"
                                   " sin-halfplane, precision-scaling")
        ->required();
    be->add_option("--output-dir", outdir, "directory for CSV and summary files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    if (max_depth >= 0) ov.max_depth = max_depth;
    if (iteration_cap >= 0) ov.iteration_cap = iteration_cap;
    if (threads >= 0) ov.threads = threads;
    if (!dump_tree.empty()) ov.dump_tree = dump_tree;
    if (!roots.empty()) ov.roots_path = roots;

    try {
        if (cl->parsed()) return rootclust::cmd_cluster(input, output, ov);
        if (an->parsed()) return rootclust::cmd_analyze(input, roots, output, ov);
        if (be->parsed()) return rootclust::cmd_bench(suite, outdir);
    } catch (const rootclust::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
