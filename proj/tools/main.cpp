#include <cstdint>
#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "fundcost/report.hpp"
#include "fundcost/runner.hpp"
#include "fundcost/scenario.hpp"

namespace {

struct CliArgs {
    std::string config_path;
    std::string mode;
    std::string out_dir = ".";
    std::string format = "json";
    std::uint64_t seed = 0;
    std::uint64_t paths = 0;
    bool seed_set = false;
    bool paths_set = false;
    int threads = 1;
    bool verbose = false;
};

void print_summary(const fundcost::RunReport& report) {
    using fundcost::RunMode;
    switch (report.config.mode) {
        case RunMode::price: {
            const fundcost::FvaResult& r = *report.price;
            std::printf("fva_total %.2f (se %.2f), fca_baseline %.2f (se %.2f)\n", r.fva_total,
                        r.fva_total_se, r.fca_baseline.value, r.fca_baseline.std_error);
            break;
        }
        case RunMode::sweep_ois:
        case RunMode::sweep_spread:
            for (const fundcost::SweepRow& row : report.sweep_rows) {
                std::printf("level %.4f: fva_total %.2f (se %.2f), fca_baseline %.2f\n",
                            row.level, row.result.fva_total, row.result.fva_total_se,
                            row.result.fca_baseline.value);
            }
            break;
        case RunMode::nsfr_profile: {
            const fundcost::NsfrProfileResult& p = *report.profile;
            std::printf("expected NSFR: %.4f at start, %.4f at maturity (%zu steps)\n",
                        p.nsfr_standard.front().value, p.nsfr_standard.back().value,
                        p.times.size());
            break;
        }
        case RunMode::optimize: {
            const fundcost::OptimizeResult& o = *report.optimize;
            std::printf("optimal cost %.2f (se %.2f) over %zu decisions\n",
                        o.optimal_cost.value, o.optimal_cost.std_error,
                        o.decision_times.size());
            for (const fundcost::PolicyComparisonRow& row : o.fixed) {
                std::printf("fixed %.2fy: cost %.2f, margin-only baseline %.2f\n",
                            row.maturity_years, row.fixed_cost.value, row.fca_baseline.value);
            }
            break;
        }
    }
    std::printf("wall %.3fs, %zu paths, %d threads\n", report.runtime.wall_seconds,
                report.runtime.n_paths, report.runtime.threads);
}

int run_command(const CliArgs& args) {
    fundcost::ScenarioConfig config = fundcost::load_scenario_file(args.config_path);
    if (!args.mode.empty()) config.mode = fundcost::parse_run_mode(args.mode);
    if (args.seed_set) config.seed = args.seed;
    if (args.paths_set) config.n_paths = static_cast<std::size_t>(args.paths);
    fundcost::validate_scenario(config);

    fundcost::RunOptions options;
    options.threads = args.threads;
    options.verbose = args.verbose;
    const fundcost::RunReport report = fundcost::run(config, options);

    const std::vector<std::string> written =
        fundcost::write_report(report, args.format, args.out_dir);
    if (args.verbose) {
        for (const std::string& path : written) std::printf("wrote %s\n", path.c_str());
    }
    print_summary(report);
    return 0;
}

int validate_command(const CliArgs& args) {
    const fundcost::ScenarioConfig config = fundcost::load_scenario_file(args.config_path);
    fundcost::validate_scenario(config);
    std::printf("config ok: mode %s, %zu paths, %zu quotes\n",
                fundcost::to_string(config.mode).c_str(), config.n_paths, config.quotes.size());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"NSFR-aware funding cost engine for a hedged interest rate swap"};
    app.require_subcommand(1);
    CliArgs args;

    CLI::App* run_cmd = app.add_subcommand("run", "Run a scenario and write reports");
    run_cmd->add_option("-c,--config", args.config_path, "Scenario config file")->required();
    run_cmd->add_option("-m,--mode", args.mode,
                        "Override the config's run mode (price, sweep_ois, sweep_spread, "
                        "nsfr_profile, optimize)");
    auto* seed_opt = run_cmd->add_option("--seed", args.seed, "Override the simulation seed");
    auto* paths_opt = run_cmd->add_option("--paths", args.paths, "Override the path count");
    run_cmd->add_option("-o,--out", args.out_dir, "Output directory (default: .)");
    run_cmd->add_option("-f,--format", args.format, "Report format: json, csv, text or all")
        ->check(CLI::IsMember({"json", "csv", "text", "all"}));
    run_cmd->add_option("-t,--threads", args.threads, "Worker threads (0 = hardware)")
        ->check(CLI::NonNegativeNumber);
    run_cmd->add_flag("-v,--verbose", args.verbose, "Print written files");

    CLI::App* validate_cmd = app.add_subcommand("validate", "Validate a scenario config");
    validate_cmd->add_option("-c,--config", args.config_path, "Scenario config file")->required();

    CLI11_PARSE(app, argc, argv);
    args.seed_set = seed_opt->count() > 0;
    args.paths_set = paths_opt->count() > 0;

    try {
        if (run_cmd->parsed()) return run_command(args);
        return validate_command(args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
