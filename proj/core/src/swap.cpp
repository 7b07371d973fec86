#include "fundcost/swap.hpp"

#include <stdexcept>

#include "fundcost/parallel.hpp"

namespace fundcost {

void SwapSpec::validate() const {
    if (notional <= 0.0) throw std::invalid_argument("SwapSpec: notional must be > 0");
    if (maturity_years <= 0.0) throw std::invalid_argument("SwapSpec: maturity must be > 0");
    if (fixed_rate < 0.0) throw std::invalid_argument("SwapSpec: fixed rate must be >= 0");
    if (payments_per_year <= 0)
        throw std::invalid_argument("SwapSpec: payments_per_year must be > 0");
}

double value_swap(const SwapSpec& swap, const VasicekParams& params, const TimeGrid& grid,
                  std::span<const double> path_rates, std::size_t step) {
    if (step >= grid.size()) throw std::out_of_range("value_swap: step past end of grid");
    if (path_rates.size() != grid.size())
        throw std::invalid_argument("value_swap: path length does not match grid");

    // The final exchange has settled; nothing remains.
    if (step == grid.last_index()) return 0.0;

    const double delta = grid.payment_period();
    const std::size_t stride = grid.payment_indices[1] - grid.payment_indices[0];
    const std::size_t last_reset = (step / stride) * stride;
    const std::size_t next_payment = last_reset + stride;

    const double t = grid.times[step];
    const double r_now = path_rates[step];

    // Floating leg as a par bond: after each reset it is worth par plus the
    // coupon fixed off the zero curve at the reset date.
    const double p_reset = zero_coupon_bond_price(params, path_rates[last_reset], delta);
    const double libor = (1.0 / p_reset - 1.0) / delta;
    const double float_bond = swap.notional * (1.0 + libor * delta) *
                              zero_coupon_bond_price(params, r_now, grid.times[next_payment] - t);

    // Fixed leg as a coupon bond over the remaining payment dates.
    double fixed_bond = 0.0;
    for (std::size_t idx : grid.payment_indices) {
        if (idx < next_payment) continue;
        fixed_bond += swap.fixed_rate * delta * swap.notional *
                      zero_coupon_bond_price(params, r_now, grid.times[idx] - t);
    }
    fixed_bond += swap.notional * zero_coupon_bond_price(params, r_now, grid.maturity() - t);

    const double value = float_bond - fixed_bond;
    return swap.pay_fixed ? value : -value;
}

std::vector<double> swap_values(const SwapSpec& swap, const VasicekParams& params,
                                std::span<const double> path_rates, const TimeGrid& grid) {
    std::vector<double> values(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        values[k] = value_swap(swap, params, grid, path_rates, k);
    }
    return values;
}

ExposureSet build_exposures(const SwapSpec& swap, const VasicekParams& params,
                            const PathSet& paths, int threads) {
    swap.validate();
    params.validate();

    ExposureSet out;
    out.grid = paths.grid;
    out.n_paths = paths.n_paths;
    out.values.resize(paths.n_paths * paths.grid.size());

    const std::size_t n_steps = paths.grid.size();
    parallel_for(paths.n_paths, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t p = begin; p < end; ++p) {
            std::span<const double> rates = paths.path(p);
            double* row = out.values.data() + p * n_steps;
            for (std::size_t k = 0; k < n_steps; ++k) {
                row[k] = value_swap(swap, params, paths.grid, rates, k);
            }
        }
    });

    return out;
}

}  // namespace fundcost
