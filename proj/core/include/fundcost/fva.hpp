#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fundcost/balance_sheet.hpp"
#include "fundcost/path_simulator.hpp"
#include "fundcost/stats.hpp"

namespace fundcost {

// One unsecured debt quote: remaining maturity, the spread the bank pays
// over the short rate, the spread charged when covering a collateral
// shortfall, and the ASF weight its bucket earns.
struct FundingQuote {
    double maturity_years = 1.0;
    double spread = 0.0051;
    double shortfall_spread = 0.0051;
    double alpha = 0.5;

    void validate() const;
};

// Builds a quote with the ASF weight taken from the schedule and the
// shortfall spread defaulting to the funding spread.
FundingQuote make_quote(double maturity_years, double spread, const WeightSchedule& weights,
                        std::optional<double> shortfall_spread = std::nullopt);

// Per-path discounted running cost sum_k exp(-(int_0^{t_k} r du +
// discount_spread t_k)) * spread * series[k] * dt_k, left point, so the
// final grid point accrues nothing. `series` is flat row-major per path,
// same layout as PathSet::rates. Splitting the spread that multiplies the
// series from the spread inside the discount lets tests vary one while
// holding the other fixed.
std::vector<double> funding_leg_integrals(const PathSet& paths, std::span<const double> series,
                                          double spread, double discount_spread, int threads = 1);

// Monte Carlo mean and standard error of the per-path integrals above.
McEstimate funding_leg_cost(const PathSet& paths, std::span<const double> series, double spread,
                            double discount_spread, int threads = 1);

// Cost of carrying the debt series at the quote's spread, discounted at the
// bank's funding rate (short rate plus the quote spread).
McEstimate fva1(const PathSet& paths, std::span<const double> debt, const FundingQuote& quote,
                int threads = 1);

// Cost of funding the collateral shortfall max(collateral - debt, 0) at the
// quote's shortfall spread. Exactly zero when debt covers the collateral on
// every path and step.
McEstimate fva2(const PathSet& paths, std::span<const double> debt,
                std::span<const double> collateral, const FundingQuote& quote, int threads = 1);

// Baseline funding cost on the positive part of an exposure series at the
// quote's spread.
McEstimate fca(const PathSet& paths, std::span<const double> exposure, const FundingQuote& quote,
               int threads = 1);

// Priced components of one scenario. fva_total is fva1 + fva2 by
// construction; its standard error comes from the per-path sums of both
// legs, which captures their correlation.
struct FvaResult {
    McEstimate fva1;
    McEstimate fva2;
    McEstimate fca_baseline;
    double fva_total = 0.0;
    double fva_total_se = 0.0;
    std::size_t n_paths = 0;
};

}  // namespace fundcost
