#include "fundcost/balance_sheet.hpp"

#include <algorithm>
#include <stdexcept>

#include "fundcost/parallel.hpp"

namespace fundcost {

double WeightSchedule::asf_weight(double maturity_years) const {
    if (maturity_years < 0.5)
        throw std::invalid_argument("WeightSchedule: debt under six months has no ASF weight");
    if (maturity_years < 1.0) return 0.5;
    if (maturity_years == 1.0) return one_year_alpha;
    return 1.0;
}

void BalanceConfig::validate() const {
    if (reg_capital < 0.0)
        throw std::invalid_argument("BalanceConfig: reg_capital must be >= 0");
    if (liability_floor <= 0.0)
        throw std::invalid_argument("BalanceConfig: liability_floor must be > 0");
    if (one_year_alpha != 0.5 && one_year_alpha != 1.0)
        throw std::invalid_argument("BalanceConfig: one_year_alpha must be 0.5 or 1.0");
}

BalanceInputs balance_inputs(double swap_value, double posted_collateral, double initial_margin) {
    if (posted_collateral < 0.0)
        throw std::invalid_argument("balance_inputs: posted collateral must be >= 0");
    if (initial_margin < 0.0)
        throw std::invalid_argument("balance_inputs: initial margin must be >= 0");
    BalanceInputs in;
    in.net_derivative_asset =
        std::max(swap_value, 0.0) + posted_collateral + initial_margin;
    in.net_collateral = 0.0;
    in.derivative_liability = std::max(-swap_value, 0.0);
    return in;
}

double compute_rsf(const BalanceInputs& inputs, double liability_floor) {
    const double asset = std::max(inputs.net_derivative_asset - inputs.net_collateral, 0.0);
    const double liability = std::max(inputs.derivative_liability, liability_floor);
    return rsf_asset_weight * asset + rsf_liability_weight * liability;
}

double compute_asf(double reg_capital, double debt, double alpha) {
    return reg_capital + alpha * debt;
}

double required_debt(double rsf, double reg_capital, double alpha) {
    if (alpha <= 0.0) throw std::invalid_argument("required_debt: alpha must be > 0");
    return std::max((rsf - reg_capital) / alpha, 0.0);
}

double standard_debt(double initial_margin, double posted_collateral) {
    return initial_margin + posted_collateral;
}

std::vector<double> rsf_series(const ExposureSet& exposures, double initial_margin,
                               double liability_floor, int threads) {
    const std::size_t n_steps = exposures.grid.size();
    std::vector<double> rsf(exposures.n_paths * n_steps);
    parallel_for(exposures.n_paths, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t p = begin; p < end; ++p) {
            for (std::size_t k = 0; k < n_steps; ++k) {
                const double v = exposures.value(p, k);
                const BalanceInputs in = balance_inputs(v, std::max(v, 0.0), initial_margin);
                rsf[p * n_steps + k] = compute_rsf(in, liability_floor);
            }
        }
    });
    return rsf;
}

BalanceSeries nsfr_series(const ExposureSet& exposures, double initial_margin, DebtRule rule,
                          const BalanceConfig& config, double alpha, int threads) {
    config.validate();
    if (initial_margin < 0.0)
        throw std::invalid_argument("nsfr_series: initial margin must be >= 0");
    if (alpha != 0.5 && alpha != 1.0)
        throw std::invalid_argument("nsfr_series: alpha must be 0.5 or 1.0");

    BalanceSeries out;
    out.grid = exposures.grid;
    out.n_paths = exposures.n_paths;
    const std::size_t n = exposures.n_paths * exposures.grid.size();
    out.rsf.resize(n);
    out.debt.resize(n);
    out.asf.resize(n);
    out.nsfr.resize(n);

    const std::size_t n_steps = exposures.grid.size();
    parallel_for(exposures.n_paths, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t p = begin; p < end; ++p) {
            for (std::size_t k = 0; k < n_steps; ++k) {
                const std::size_t i = p * n_steps + k;
                const double v = exposures.value(p, k);
                const double collateral = std::max(v, 0.0);
                const BalanceInputs in = balance_inputs(v, collateral, initial_margin);
                out.rsf[i] = compute_rsf(in, config.liability_floor);
                out.debt[i] = rule == DebtRule::nsfr_pinned
                                  ? required_debt(out.rsf[i], config.reg_capital, alpha)
                                  : standard_debt(initial_margin, collateral);
                out.asf[i] = compute_asf(config.reg_capital, out.debt[i], alpha);
                out.nsfr[i] = out.asf[i] / out.rsf[i];
            }
        }
    });
    return out;
}

}  // namespace fundcost
