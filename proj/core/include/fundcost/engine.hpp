#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fundcost/balance_sheet.hpp"
#include "fundcost/fva.hpp"
#include "fundcost/path_simulator.hpp"
#include "fundcost/swap.hpp"
#include "fundcost/vasicek.hpp"

namespace fundcost {

// Everything needed to simulate one scenario, independent of the funding
// quote so one simulation can price many quotes.
struct EngineConfig {
    VasicekParams rates;
    SwapSpec swap;
    double im_fraction = 0.01;  // initial margin as a fraction of notional
    BalanceConfig balance;
    int steps_per_year = 12;
    std::size_t n_paths = 10000;
    std::uint64_t seed = 42;

    void validate() const;
};

// Simulated artifacts shared by every pricing pass over a scenario. All
// flat series are row-major per path, same layout as PathSet::rates.
struct ScenarioData {
    TimeGrid grid;
    PathSet paths;
    ExposureSet exposures;
    double initial_margin = 0.0;
    std::vector<double> collateral;  // posted variation margin max(V, 0)
    std::vector<double> rsf;         // required stable funding per step
};

ScenarioData build_scenario(const EngineConfig& config, int threads = 1);

// Debt that pins NSFR to 1 given the scenario's RSF, for one debt weight.
std::vector<double> pinned_debt_series(const ScenarioData& scenario, const BalanceConfig& balance,
                                       double alpha);

// Full pricing pass under one quote: carry cost of the NSFR-pinning debt,
// shortfall cost of any remaining collateral gap, and the baseline cost of
// funding just the posted margin without the ratio constraint.
FvaResult price_all(const ScenarioData& scenario, const BalanceConfig& balance,
                    const FundingQuote& quote, int threads = 1);

// Convenience overload that simulates and prices in one call.
FvaResult price_all(const EngineConfig& config, const FundingQuote& quote, int threads = 1);

}  // namespace fundcost
