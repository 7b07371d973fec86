#pragma once

#include <cstddef>
#include <vector>

namespace fundcost {

// Simulation grid over the life of the trade. Step times are strictly
// increasing, start at 0 and end at the swap maturity; payment_indices marks
// the subset of steps that are coupon exchange dates (first and last step are
// always payment dates).
struct TimeGrid {
    std::vector<double> times;
    std::vector<std::size_t> payment_indices;

    // Uniform grid with steps_per_year substeps and payments_per_year coupon
    // dates per year, e.g. (5.0, 12, 2) = monthly steps, semiannual coupons.
    static TimeGrid make(double maturity_years, int steps_per_year, int payments_per_year);

    std::size_t size() const { return times.size(); }
    std::size_t last_index() const { return times.size() - 1; }
    double maturity() const { return times.back(); }
    double dt(std::size_t i) const { return times[i + 1] - times[i]; }
    double payment_period() const;

    // Throws std::invalid_argument when the invariants above do not hold.
    void validate() const;
};

}  // namespace fundcost
