#include "fundcost/engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "fundcost/stats.hpp"

namespace fundcost {

void EngineConfig::validate() const {
    rates.validate();
    swap.validate();
    balance.validate();
    if (im_fraction < 0.0) throw std::invalid_argument("EngineConfig: im_fraction must be >= 0");
    if (steps_per_year <= 0)
        throw std::invalid_argument("EngineConfig: steps_per_year must be > 0");
    if (steps_per_year % swap.payments_per_year != 0)
        throw std::invalid_argument(
            "EngineConfig: steps_per_year must be a multiple of payments_per_year");
    if (n_paths == 0) throw std::invalid_argument("EngineConfig: n_paths must be positive");
}

ScenarioData build_scenario(const EngineConfig& config, int threads) {
    config.validate();

    ScenarioData data;
    data.grid = TimeGrid::make(config.swap.maturity_years, config.steps_per_year,
                               config.swap.payments_per_year);
    data.paths = simulate_paths(config.rates, data.grid, config.n_paths, config.seed, threads);
    data.exposures = build_exposures(config.swap, config.rates, data.paths, threads);
    data.initial_margin = config.im_fraction * config.swap.notional;

    data.collateral.resize(data.exposures.values.size());
    for (std::size_t i = 0; i < data.collateral.size(); ++i) {
        data.collateral[i] = std::max(data.exposures.values[i], 0.0);
    }
    data.rsf = rsf_series(data.exposures, data.initial_margin, config.balance.liability_floor,
                          threads);
    return data;
}

std::vector<double> pinned_debt_series(const ScenarioData& scenario, const BalanceConfig& balance,
                                       double alpha) {
    std::vector<double> debt(scenario.rsf.size());
    for (std::size_t i = 0; i < debt.size(); ++i) {
        debt[i] = required_debt(scenario.rsf[i], balance.reg_capital, alpha);
    }
    return debt;
}

FvaResult price_all(const ScenarioData& scenario, const BalanceConfig& balance,
                    const FundingQuote& quote, int threads) {
    quote.validate();
    balance.validate();

    const std::vector<double> debt = pinned_debt_series(scenario, balance, quote.alpha);
    std::vector<double> shortfall(debt.size());
    std::vector<double> margin(debt.size());
    for (std::size_t i = 0; i < debt.size(); ++i) {
        shortfall[i] = std::max(scenario.collateral[i] - debt[i], 0.0);
        margin[i] = scenario.initial_margin + scenario.collateral[i];
    }

    const std::vector<double> carry =
        funding_leg_integrals(scenario.paths, debt, quote.spread, quote.spread, threads);
    const std::vector<double> gap = funding_leg_integrals(
        scenario.paths, shortfall, quote.shortfall_spread, quote.spread, threads);
    const std::vector<double> baseline =
        funding_leg_integrals(scenario.paths, margin, quote.spread, quote.spread, threads);

    FvaResult result;
    result.fva1 = mean_and_se(carry);
    result.fva2 = mean_and_se(gap);
    result.fca_baseline = mean_and_se(baseline);
    result.fva_total = result.fva1.value + result.fva2.value;

    std::vector<double> combined(carry.size());
    for (std::size_t p = 0; p < carry.size(); ++p) combined[p] = carry[p] + gap[p];
    result.fva_total_se = mean_and_se(combined).std_error;
    result.n_paths = scenario.paths.n_paths;
    return result;
}

FvaResult price_all(const EngineConfig& config, const FundingQuote& quote, int threads) {
    const ScenarioData scenario = build_scenario(config, threads);
    return price_all(scenario, config.balance, quote, threads);
}

}  // namespace fundcost
