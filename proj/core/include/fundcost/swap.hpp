#pragma once

#include <cstddef>
#include <vector>

#include "fundcost/path_simulator.hpp"
#include "fundcost/time_grid.hpp"
#include "fundcost/vasicek.hpp"

namespace fundcost {

// Plain interest rate swap, semiannual exchange of fixed against the
// simply compounded floating rate set at the previous payment date.
// pay_fixed is the bank's side: true means the bank pays fixed and
// receives floating.
struct SwapSpec {
    double notional = 100.0e6;
    double fixed_rate = 0.02;
    double maturity_years = 5.0;
    bool pay_fixed = true;
    int payments_per_year = 2;

    void validate() const;
};

// Mark to market of the swap at grid step `step` on one simulated path,
// by bond decomposition V = B_float - B_fixed under the pay-fixed sign
// convention. The floating leg prices to par at each reset; between
// resets it carries the coupon fixed at the last reset. Exactly zero at
// maturity, after the final exchange.
double value_swap(const SwapSpec& swap, const VasicekParams& params, const TimeGrid& grid,
                  std::span<const double> path_rates, std::size_t step);

// Swap values for every step of one path.
std::vector<double> swap_values(const SwapSpec& swap, const VasicekParams& params,
                                std::span<const double> path_rates, const TimeGrid& grid);

// Per-path mark-to-market profile, same layout as PathSet::rates.
struct ExposureSet {
    TimeGrid grid;
    std::size_t n_paths = 0;
    std::vector<double> values;  // row-major, n_paths x grid.size()

    double value(std::size_t path, std::size_t step) const {
        return values[path * grid.size() + step];
    }
    std::span<const double> path(std::size_t p) const {
        return {values.data() + p * grid.size(), grid.size()};
    }
};

ExposureSet build_exposures(const SwapSpec& swap, const VasicekParams& params,
                            const PathSet& paths, int threads = 1);

}  // namespace fundcost
