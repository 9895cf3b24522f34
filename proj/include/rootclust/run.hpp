#ifndef ROOTCLUST_RUN_HPP
#define ROOTCLUST_RUN_HPP

#include <optional>
#include <string>

#include "rootclust/serialize.hpp"

namespace rootclust {

/// Command-line overrides; unset fields defer to the instance file, which in
/// turn defers to defaults.
struct CmdOverrides {
    std::optional<int> max_depth;
    std::optional<int64_t> iteration_cap;
    std::optional<int> threads;
    std::optional<std::string> dump_tree;
    std::optional<std::string> roots_path;
};

struct RunOutcome {
    Json report;
    int exit_code = 0;
    std::optional<std::string> tree_csv;
    std::optional<std::string> tree_csv_path;
};

/// Runs one clustering instance and assembles the report document.  Errors
/// with a defined exit code (depth, iteration cap) still produce a report
/// carrying an "error" object.
RunOutcome run_cluster_instance(const InstanceSpec& spec, const CmdOverrides& ov);

/// Analysis run: cluster geometries and S0 for the supplied ground-truth
/// roots; for polynomials also the predicted bounds and measured-vs-predicted
/// ratios.
RunOutcome run_analyze_instance(const InstanceSpec& spec, const RootSet& roots,
                                const CmdOverrides& ov);

// File-level entry points shared by the CLI.  Exit codes:
//   0  success
//   1  unreadable or malformed input
//   2  DepthExceeded / IterationCap / analysis precondition (report written)
//   3  bench suite assertion failed
int cmd_cluster(const std::string& input_path, const std::string& output_path,
                const CmdOverrides& ov);
int cmd_analyze(const std::string& input_path, const std::string& roots_path,
                const std::string& output_path, const CmdOverrides& ov);
int cmd_bench(const std::string& suite, const std::string& output_dir);

}  // namespace rootclust

#endif
