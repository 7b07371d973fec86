#include "fundcost/time_grid.hpp"

#include <cmath>
#include <stdexcept>

namespace fundcost {

TimeGrid TimeGrid::make(double maturity_years, int steps_per_year, int payments_per_year) {
    if (maturity_years <= 0.0) throw std::invalid_argument("TimeGrid: maturity must be > 0");
    if (steps_per_year <= 0 || payments_per_year <= 0)
        throw std::invalid_argument("TimeGrid: steps_per_year and payments_per_year must be > 0");
    if (steps_per_year % payments_per_year != 0)
        throw std::invalid_argument("TimeGrid: steps_per_year must be a multiple of payments_per_year");

    double steps_exact = maturity_years * steps_per_year;
    auto n_steps = static_cast<std::size_t>(std::llround(steps_exact));
    if (n_steps == 0 || std::abs(steps_exact - static_cast<double>(n_steps)) > 1e-9)
        throw std::invalid_argument("TimeGrid: maturity must be a whole number of steps");
    double payments_exact = maturity_years * payments_per_year;
    if (std::abs(payments_exact - std::llround(payments_exact)) > 1e-9)
        throw std::invalid_argument("TimeGrid: maturity must be a whole number of payment periods");

    TimeGrid grid;
    grid.times.resize(n_steps + 1);
    for (std::size_t i = 0; i <= n_steps; ++i)
        grid.times[i] = maturity_years * static_cast<double>(i) / static_cast<double>(n_steps);

    std::size_t stride = static_cast<std::size_t>(steps_per_year / payments_per_year);
    for (std::size_t i = 0; i <= n_steps; i += stride) grid.payment_indices.push_back(i);

    grid.validate();
    return grid;
}

double TimeGrid::payment_period() const {
    if (payment_indices.size() < 2)
        throw std::invalid_argument("TimeGrid: need at least two payment dates");
    return times[payment_indices[1]] - times[payment_indices[0]];
}

void TimeGrid::validate() const {
    if (times.size() < 2) throw std::invalid_argument("TimeGrid: need at least two step times");
    if (times.front() != 0.0) throw std::invalid_argument("TimeGrid: first step time must be 0");
    for (std::size_t i = 0; i + 1 < times.size(); ++i)
        if (times[i + 1] <= times[i])
            throw std::invalid_argument("TimeGrid: step times must be strictly increasing");
    if (payment_indices.size() < 2)
        throw std::invalid_argument("TimeGrid: need at least two payment dates");
    if (payment_indices.front() != 0 || payment_indices.back() != last_index())
        throw std::invalid_argument("TimeGrid: payment dates must include first and last step");
    for (std::size_t k = 0; k + 1 < payment_indices.size(); ++k)
        if (payment_indices[k + 1] <= payment_indices[k])
            throw std::invalid_argument("TimeGrid: payment indices must be strictly increasing");
    if (payment_indices.back() >= times.size())
        throw std::invalid_argument("TimeGrid: payment index out of range");
}

}  // namespace fundcost
