#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "swarmsim/engine.hpp"
#include "swarmsim/scenario.hpp"

namespace {

using swarmsim::cli::Options;

/// Shared option set; `with_ref` adds --ref-agent (metrics and plot only).
void add_common(CLI::App* cmd, Options& o, bool with_ref) {
    auto* case_opt =
        cmd->add_option("--case", o.case_id, "built-in study preset (1, 2, or 3)")
            ->check(CLI::Range(1, 3));
    auto* file_opt = cmd->add_option("--scenario", o.scenario_path, "scenario JSON file");
    case_opt->excludes(file_opt);
    file_opt->excludes(case_opt);
    auto* seed_opt =
        cmd->add_option("--seed", o.seed, "seed override (default: the scenario's own seed)");
    cmd->add_option("--out", o.out_dir, "output directory (default: $SWARMSIM_OUT)")
        ->envname("SWARMSIM_OUT");
    if (with_ref) {
        cmd->add_option("--ref-agent", o.ref_agent, "reference agent index (default 0)");
    }
    cmd->add_option("--override", o.overrides,
                    "scenario override as dotted.path=value, repeatable "
                    "(e.g. --override gains.k_r=0.5)");
    cmd->parse_complete_callback([&o, seed_opt] { o.seed_given = seed_opt->count() > 0; });
}

int check_common(const Options& o) {
    if (o.case_id == 0 && o.scenario_path.empty()) {
        std::cerr << "error: no scenario given: pass --case or --scenario\n";
        return 1;
    }
    if (o.out_dir.empty()) {
        std::cerr << "error: no output directory: pass --out or set SWARMSIM_OUT\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"deterministic multi-agent coverage and avoidance simulator"};
    app.require_subcommand(1);

    Options run_opt, metrics_opt, plot_opt;
    CLI::App* run = app.add_subcommand("run", "simulate a scenario and write its logs");
    add_common(run, run_opt, /*with_ref=*/false);
    CLI::App* metrics =
        app.add_subcommand("metrics", "derive a metrics report from a finished run");
    add_common(metrics, metrics_opt, /*with_ref=*/true);
    CLI::App* plot = app.add_subcommand("plot", "render SVG figures from a finished run");
    add_common(plot, plot_opt, /*with_ref=*/true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            if (const int rc = check_common(run_opt)) return rc;
            return swarmsim::cli::cmd_run(run_opt);
        }
        if (metrics->parsed()) {
            if (const int rc = check_common(metrics_opt)) return rc;
            return swarmsim::cli::cmd_metrics(metrics_opt);
        }
        if (plot->parsed()) {
            if (const int rc = check_common(plot_opt)) return rc;
            return swarmsim::cli::cmd_plot(plot_opt);
        }
    } catch (const swarmsim::SimulationAbort& e) {
        std::cerr << "runtime abort: " << e.what() << '\n';
        return 2;
    } catch (const swarmsim::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
