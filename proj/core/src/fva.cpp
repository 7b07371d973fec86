#include "fundcost/fva.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fundcost/parallel.hpp"

namespace fundcost {

void FundingQuote::validate() const {
    if (maturity_years < 0.5)
        throw std::invalid_argument("FundingQuote: maturity must be at least six months");
    if (spread < 0.0) throw std::invalid_argument("FundingQuote: spread must be >= 0");
    if (shortfall_spread < 0.0)
        throw std::invalid_argument("FundingQuote: shortfall_spread must be >= 0");
    if (alpha != 0.5 && alpha != 1.0)
        throw std::invalid_argument("FundingQuote: alpha must be 0.5 or 1.0");
}

FundingQuote make_quote(double maturity_years, double spread, const WeightSchedule& weights,
                        std::optional<double> shortfall_spread) {
    FundingQuote q;
    q.maturity_years = maturity_years;
    q.spread = spread;
    q.shortfall_spread = shortfall_spread.value_or(spread);
    q.alpha = weights.asf_weight(maturity_years);
    q.validate();
    return q;
}

std::vector<double> funding_leg_integrals(const PathSet& paths, std::span<const double> series,
                                          double spread, double discount_spread, int threads) {
    const std::size_t n_steps = paths.grid.size();
    if (series.size() != paths.n_paths * n_steps)
        throw std::invalid_argument("funding_leg_integrals: series does not match path set");

    std::vector<double> integrals(paths.n_paths);
    parallel_for(paths.n_paths, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t p = begin; p < end; ++p) {
            const double* rates = paths.rates.data() + p * n_steps;
            const double* values = series.data() + p * n_steps;
            double rate_integral = 0.0;
            double total = 0.0;
            for (std::size_t k = 0; k + 1 < n_steps; ++k) {
                const double t = paths.grid.times[k];
                const double dt = paths.grid.dt(k);
                const double df = std::exp(-(rate_integral + discount_spread * t));
                total += df * spread * values[k] * dt;
                rate_integral += rates[k] * dt;
            }
            integrals[p] = total;
        }
    });
    return integrals;
}

McEstimate funding_leg_cost(const PathSet& paths, std::span<const double> series, double spread,
                            double discount_spread, int threads) {
    return mean_and_se(funding_leg_integrals(paths, series, spread, discount_spread, threads));
}

McEstimate fva1(const PathSet& paths, std::span<const double> debt, const FundingQuote& quote,
                int threads) {
    quote.validate();
    return funding_leg_cost(paths, debt, quote.spread, quote.spread, threads);
}

McEstimate fva2(const PathSet& paths, std::span<const double> debt,
                std::span<const double> collateral, const FundingQuote& quote, int threads) {
    quote.validate();
    if (debt.size() != collateral.size())
        throw std::invalid_argument("fva2: debt and collateral series differ in length");
    std::vector<double> shortfall(debt.size());
    for (std::size_t i = 0; i < debt.size(); ++i) {
        shortfall[i] = std::max(std::max(collateral[i], 0.0) - debt[i], 0.0);
    }
    return funding_leg_cost(paths, shortfall, quote.shortfall_spread, quote.spread, threads);
}

McEstimate fca(const PathSet& paths, std::span<const double> exposure, const FundingQuote& quote,
               int threads) {
    quote.validate();
    std::vector<double> positive(exposure.size());
    for (std::size_t i = 0; i < exposure.size(); ++i) {
        positive[i] = std::max(exposure[i], 0.0);
    }
    return funding_leg_cost(paths, positive, quote.spread, quote.spread, threads);
}

}  // namespace fundcost
