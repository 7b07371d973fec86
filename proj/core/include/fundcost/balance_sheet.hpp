#pragma once

#include <cstddef>
#include <vector>

#include "fundcost/swap.hpp"
#include "fundcost/time_grid.hpp"

namespace fundcost {

// Required-stable-funding weights on the asset side. Derivative assets must
// be fully funded; derivative liabilities demand 20 cents of stable funding
// per unit as a potential-outflow add-on.
inline constexpr double rsf_asset_weight = 1.0;
inline constexpr double rsf_liability_weight = 0.2;

// Available-stable-funding recognition of unsecured debt by remaining
// maturity. Debt under six months gives no stable funding and is not
// quotable here, six months up to a year counts at half weight, beyond a
// year at full weight. Regulatory texts bucket exactly one year both ways,
// so that point is configurable; the default keeps it at half weight.
struct WeightSchedule {
    double one_year_alpha = 0.5;

    // Throws std::invalid_argument for maturities below six months.
    double asf_weight(double maturity_years) const;
};

// Static regulatory inputs around one trade.
struct BalanceConfig {
    double reg_capital = 500000.0;
    double liability_floor = 10000.0;  // minimum derivative-liability input
    double one_year_alpha = 0.5;

    void validate() const;
};

// Funding-relevant positions at one step of one path. The client swap is
// uncollateralized and the hedge is cleared, so the bank receives no
// collateral; the client receivable plus everything posted to the clearing
// house is an asset the bank must fund.
struct BalanceInputs {
    double net_derivative_asset = 0.0;
    double net_collateral = 0.0;  // collateral received, none in this book
    double derivative_liability = 0.0;
};

BalanceInputs balance_inputs(double swap_value, double posted_collateral, double initial_margin);

// RSF = 1.0 max(net derivative asset - net collateral, 0)
//     + 0.2 max(derivative liability, floor).
double compute_rsf(const BalanceInputs& inputs, double liability_floor);

// ASF = reg capital + alpha * debt.
double compute_asf(double reg_capital, double debt, double alpha);

// Smallest debt amount that lifts NSFR to 1, clamped at zero when capital
// alone already covers the requirement. Throws on alpha <= 0.
double required_debt(double rsf, double reg_capital, double alpha);

// Funding the bank would raise without the NSFR constraint: just the posted
// margin.
double standard_debt(double initial_margin, double posted_collateral);

// How the debt level is chosen at each step.
enum class DebtRule {
    standard,     // debt = initial margin + posted collateral
    nsfr_pinned,  // debt backsolved so NSFR = 1 where feasible
};

// Per-path, per-step funding state, flat row-major like PathSet::rates.
struct BalanceSeries {
    TimeGrid grid;
    std::size_t n_paths = 0;
    std::vector<double> rsf;
    std::vector<double> debt;
    std::vector<double> asf;
    std::vector<double> nsfr;

    std::size_t index(std::size_t path, std::size_t step) const {
        return path * grid.size() + step;
    }
};

// Full funding state along every path: RSF from the exposures, debt per the
// rule, ASF with the given debt weight, NSFR = ASF / RSF. The liability
// floor keeps RSF strictly positive, so NSFR is always finite.
BalanceSeries nsfr_series(const ExposureSet& exposures, double initial_margin, DebtRule rule,
                          const BalanceConfig& config, double alpha, int threads = 1);

// RSF alone, same layout, for callers that apply several debt rules or
// weights to one simulated scenario.
std::vector<double> rsf_series(const ExposureSet& exposures, double initial_margin,
                               double liability_floor, int threads = 1);

}  // namespace fundcost
