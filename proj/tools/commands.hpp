#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace swarmsim::cli {

/// Options shared by the run / metrics / plot subcommands.
struct Options {
    int case_id = 0;  ///< 0 means "not given"
    std::string scenario_path;
    bool seed_given = false;
    std::uint64_t seed = 0;
    std::string out_dir;
    std::size_t ref_agent = 0;
    std::vector<std::string> overrides;  ///< dotted.path=json_value
};

/// Simulate and write trajectory.csv, events.csv, manifest.json; print a
/// run summary. Returns the process exit code.
int cmd_run(const Options& opt);

/// Derive metrics from an existing trajectory.csv; write metrics.json and
/// print it. Returns the process exit code.
int cmd_metrics(const Options& opt);

/// Render SVG figures from an existing trajectory.csv. Returns the process
/// exit code.
int cmd_plot(const Options& opt);

}  // namespace swarmsim::cli
