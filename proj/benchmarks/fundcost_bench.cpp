#include <benchmark/benchmark.h>

#include "fundcost/engine.hpp"
#include "fundcost/optimizer.hpp"

namespace {

fundcost::EngineConfig bench_config(std::size_t n_paths) {
    fundcost::EngineConfig config;
    config.n_paths = n_paths;
    config.steps_per_year = 12;
    return config;
}

void BM_SimulatePaths(benchmark::State& state) {
    const fundcost::EngineConfig config = bench_config(static_cast<std::size_t>(state.range(0)));
    const fundcost::TimeGrid grid = fundcost::TimeGrid::make(
        config.swap.maturity_years, config.steps_per_year, config.swap.payments_per_year);
    for (auto _ : state) {
        fundcost::PathSet paths =
            fundcost::simulate_paths(config.rates, grid, config.n_paths, config.seed);
        benchmark::DoNotOptimize(paths.rates.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulatePaths)->Arg(1000)->Arg(10000);

void BM_BuildExposures(benchmark::State& state) {
    const fundcost::EngineConfig config = bench_config(static_cast<std::size_t>(state.range(0)));
    const fundcost::TimeGrid grid = fundcost::TimeGrid::make(
        config.swap.maturity_years, config.steps_per_year, config.swap.payments_per_year);
    const fundcost::PathSet paths =
        fundcost::simulate_paths(config.rates, grid, config.n_paths, config.seed);
    for (auto _ : state) {
        fundcost::ExposureSet exposures =
            fundcost::build_exposures(config.swap, config.rates, paths);
        benchmark::DoNotOptimize(exposures.values.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildExposures)->Arg(1000)->Arg(10000);

void BM_PriceAll(benchmark::State& state) {
    const fundcost::EngineConfig config = bench_config(static_cast<std::size_t>(state.range(0)));
    const fundcost::ScenarioData scenario = fundcost::build_scenario(config);
    const fundcost::FundingQuote quote;
    for (auto _ : state) {
        fundcost::FvaResult result = fundcost::price_all(scenario, config.balance, quote);
        benchmark::DoNotOptimize(result.fva_total);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PriceAll)->Arg(1000)->Arg(10000);

void BM_SolvePolicy(benchmark::State& state) {
    fundcost::EngineConfig config = bench_config(static_cast<std::size_t>(state.range(0)));
    const fundcost::ScenarioData scenario = fundcost::build_scenario(config);
    const fundcost::WeightSchedule weights{config.balance.one_year_alpha};
    const std::vector<fundcost::FundingQuote> quotes = {
        fundcost::make_quote(0.5, 0.0050, weights),
        fundcost::make_quote(1.0, 0.0051, weights),
        fundcost::make_quote(2.0, 0.0052, weights),
    };
    const fundcost::PolicyGraph graph =
        fundcost::build_graph(scenario, config.balance, quotes);
    for (auto _ : state) {
        fundcost::FundingPolicy policy = fundcost::solve(graph);
        benchmark::DoNotOptimize(policy.total_cost);
    }
}
BENCHMARK(BM_SolvePolicy)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
