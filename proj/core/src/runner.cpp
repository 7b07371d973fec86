#include "fundcost/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "fundcost/balance_sheet.hpp"

namespace fundcost {

namespace {

// Mean and standard error across paths for every grid step of a flat
// row-major series.
std::vector<McEstimate> step_stats(const std::vector<double>& series, std::size_t n_paths,
                                   std::size_t n_steps) {
    std::vector<McEstimate> stats(n_steps);
    std::vector<double> column(n_paths);
    for (std::size_t k = 0; k < n_steps; ++k) {
        for (std::size_t p = 0; p < n_paths; ++p) column[p] = series[p * n_steps + k];
        stats[k] = mean_and_se(column);
    }
    return stats;
}

std::vector<std::uint64_t> nsfr_histogram(const std::vector<double>& nsfr, std::size_t n_paths,
                                          std::size_t n_steps, int buckets, double max_value) {
    const std::size_t bins = static_cast<std::size_t>(buckets) + 1;  // plus overflow
    std::vector<std::uint64_t> counts(n_steps * bins, 0);
    const double width = max_value / buckets;
    for (std::size_t p = 0; p < n_paths; ++p) {
        for (std::size_t k = 0; k < n_steps; ++k) {
            const double value = nsfr[p * n_steps + k];
            std::size_t bin = bins - 1;
            if (value < max_value) {
                const double scaled = std::max(value, 0.0) / width;
                bin = std::min(static_cast<std::size_t>(scaled), bins - 2);
            }
            ++counts[k * bins + bin];
        }
    }
    return counts;
}

std::vector<double> margin_series(const ScenarioData& scenario) {
    std::vector<double> margin(scenario.collateral.size());
    for (std::size_t i = 0; i < margin.size(); ++i)
        margin[i] = scenario.initial_margin + scenario.collateral[i];
    return margin;
}

FvaResult run_price(const ScenarioConfig& config, int threads) {
    const ScenarioData scenario = build_scenario(engine_config(config), threads);
    const FundingQuote quote = resolve_quote(config, config.quotes.front());
    return price_all(scenario, balance_config(config), quote, threads);
}

std::vector<SweepRow> run_sweep_ois(const ScenarioConfig& config, int threads) {
    const FundingQuote quote = resolve_quote(config, config.quotes.front());
    std::vector<SweepRow> rows;
    for (double level : config.sweep->levels) {
        EngineConfig engine = engine_config(config);
        engine.rates.r0 = level;
        engine.rates.long_run_mean = config.long_run_mean.value_or(level);
        const ScenarioData scenario = build_scenario(engine, threads);
        SweepRow row;
        row.level = level;
        row.maturity_years = quote.maturity_years;
        row.alpha = quote.alpha;
        row.result = price_all(scenario, engine.balance, quote, threads);
        rows.push_back(row);
    }
    return rows;
}

std::vector<SweepRow> run_sweep_spread(const ScenarioConfig& config, int threads) {
    const ScenarioData scenario = build_scenario(engine_config(config), threads);
    const BalanceConfig balance = balance_config(config);
    const WeightSchedule weights = weight_schedule(config);
    const SweepConfig& sweep = *config.sweep;

    std::vector<SweepRow> rows;
    for (double level : sweep.levels) {
        const double maturity =
            level > sweep.alpha_boundary_spread ? sweep.long_maturity : sweep.short_maturity;
        const FundingQuote quote = make_quote(maturity, level, weights);
        SweepRow row;
        row.level = level;
        row.maturity_years = maturity;
        row.alpha = quote.alpha;
        row.result = price_all(scenario, balance, quote, threads);
        rows.push_back(row);
    }
    return rows;
}

NsfrProfileResult run_nsfr_profile(const ScenarioConfig& config, int threads) {
    const ScenarioData scenario = build_scenario(engine_config(config), threads);
    const BalanceConfig balance = balance_config(config);
    const FundingQuote quote = resolve_quote(config, config.quotes.front());
    const ProfileConfig profile = config.profile.value_or(ProfileConfig{});

    const BalanceSeries standard = nsfr_series(scenario.exposures, scenario.initial_margin,
                                               DebtRule::standard, balance, quote.alpha, threads);
    const BalanceSeries pinned = nsfr_series(scenario.exposures, scenario.initial_margin,
                                             DebtRule::nsfr_pinned, balance, quote.alpha, threads);

    const std::size_t n_paths = scenario.paths.n_paths;
    const std::size_t n_steps = scenario.grid.size();

    NsfrProfileResult result;
    result.times = scenario.grid.times;
    result.nsfr_standard = step_stats(standard.nsfr, n_paths, n_steps);
    result.nsfr_pinned = step_stats(pinned.nsfr, n_paths, n_steps);
    result.debt_standard = step_stats(standard.debt, n_paths, n_steps);
    result.debt_pinned = step_stats(pinned.debt, n_paths, n_steps);
    result.histogram_buckets = profile.histogram_buckets;
    result.histogram_max = profile.histogram_max;
    result.histogram = nsfr_histogram(standard.nsfr, n_paths, n_steps, profile.histogram_buckets,
                                      profile.histogram_max);
    return result;
}

OptimizeResult run_optimize(const ScenarioConfig& config, int threads) {
    const ScenarioData scenario = build_scenario(engine_config(config), threads);
    const BalanceConfig balance = balance_config(config);

    std::vector<FundingQuote> quotes;
    for (const QuoteConfig& quote : config.quotes)
        quotes.push_back(resolve_quote(config, quote));

    const PolicyGraph graph = build_graph(scenario, balance, quotes, threads);

    OptimizeResult result;
    result.policy = solve(graph);
    for (std::size_t a = 0; a < result.policy.quote_choices.size(); ++a) {
        result.decision_times.push_back(graph.node_times[result.policy.node_path[a]]);
        result.chosen_maturities.push_back(
            quotes[result.policy.quote_choices[a]].maturity_years);
    }
    result.optimal_cost =
        mean_and_se(policy_cost_samples(scenario, balance, graph, result.policy, threads));
    result.optimal_cost.value = result.policy.total_cost;

    const std::vector<double> margin = margin_series(scenario);
    for (std::size_t q = 0; q < quotes.size(); ++q) {
        PolicyComparisonRow row;
        row.maturity_years = quotes[q].maturity_years;
        row.alpha = quotes[q].alpha;
        row.spread = quotes[q].spread;
        const FundingPolicy fixed = fixed_policy(graph, q);
        row.fixed_cost =
            mean_and_se(policy_cost_samples(scenario, balance, graph, fixed, threads));
        row.fixed_cost.value = fixed.total_cost;
        row.fca_baseline = fca(scenario.paths, margin, quotes[q], threads);
        result.fixed.push_back(row);
    }
    return result;
}

}  // namespace

RunReport run(const ScenarioConfig& config, const RunOptions& options) {
    validate_scenario(config);
    const auto start = std::chrono::steady_clock::now();

    RunReport report;
    report.config = config;
    switch (config.mode) {
        case RunMode::price:
            report.price = run_price(config, options.threads);
            break;
        case RunMode::sweep_ois:
            report.sweep_rows = run_sweep_ois(config, options.threads);
            break;
        case RunMode::sweep_spread:
            report.sweep_rows = run_sweep_spread(config, options.threads);
            break;
        case RunMode::nsfr_profile:
            report.profile = run_nsfr_profile(config, options.threads);
            break;
        case RunMode::optimize:
            report.optimize = run_optimize(config, options.threads);
            break;
    }

    const auto end = std::chrono::steady_clock::now();
    report.runtime.wall_seconds = std::chrono::duration<double>(end - start).count();
    report.runtime.n_paths = config.n_paths;
    report.runtime.threads = options.threads;
    return report;
}

}  // namespace fundcost
