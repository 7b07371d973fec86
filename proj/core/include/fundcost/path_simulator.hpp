#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fundcost/time_grid.hpp"
#include "fundcost/vasicek.hpp"

namespace fundcost {

// Simulated short-rate paths, one row per path, one column per grid step.
struct PathSet {
    TimeGrid grid;
    std::size_t n_paths = 0;
    std::vector<double> rates;  // row-major, n_paths x grid.size()

    double rate(std::size_t path, std::size_t step) const {
        return rates[path * grid.size() + step];
    }
    std::span<const double> path(std::size_t p) const {
        return {rates.data() + p * grid.size(), grid.size()};
    }
};

// Exact Ornstein-Uhlenbeck transition per step (no Euler bias):
//   r_{k+1} = b + (r_k - b) e^{-a dt} + sigma sqrt((1 - e^{-2 a dt}) / (2a)) Z.
// Path i draws from its own substream derived from (seed, i), so results are
// bit-identical for any thread count and any n_paths prefix.
PathSet simulate_paths(const VasicekParams& params, const TimeGrid& grid, std::size_t n_paths,
                       std::uint64_t seed, int threads = 1);

// Left-point discount factor exp(-sum_{i<to_index} (r_i + spread) dt_i).
// Equals 1 at index 0. Throws std::out_of_range past the end of the grid.
double discount_factor(std::span<const double> path_rates, const TimeGrid& grid, double spread,
                       std::size_t to_index);

// Cumulative left-point rate integrals along one path: out[k] =
// sum_{i<k} r_i dt_i, so discount_factor == exp(-(out[k] + spread * t_k)).
std::vector<double> rate_integrals(std::span<const double> path_rates, const TimeGrid& grid);

}  // namespace fundcost
