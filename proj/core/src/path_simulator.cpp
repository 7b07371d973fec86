#include "fundcost/path_simulator.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "fundcost/parallel.hpp"

namespace fundcost {

namespace {

// splitmix64 finalizer, used to decorrelate per-path seeds derived from the
// master seed by a Weyl increment. A raw arithmetic sequence would hand
// mt19937_64 nearly identical state words.
std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

PathSet simulate_paths(const VasicekParams& params, const TimeGrid& grid, std::size_t n_paths,
                       std::uint64_t seed, int threads) {
    params.validate();
    grid.validate();
    if (n_paths == 0) {
        throw std::invalid_argument("simulate_paths: n_paths must be positive");
    }

    PathSet out;
    out.grid = grid;
    out.n_paths = n_paths;
    out.rates.resize(n_paths * grid.size());

    const double a = params.mean_reversion;
    const double b = params.long_run_mean;
    const double sigma = params.sigma;
    const std::size_t n_steps = grid.size();

    parallel_for(n_paths, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t p = begin; p < end; ++p) {
            const std::uint64_t sub =
                seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(p) + 1);
            std::mt19937_64 rng(mix64(sub));
            std::normal_distribution<double> normal(0.0, 1.0);

            double* row = out.rates.data() + p * n_steps;
            double r = params.r0;
            row[0] = r;
            for (std::size_t k = 0; k + 1 < n_steps; ++k) {
                const double dt = grid.dt(k);
                double decay;
                double stdev;
                if (a == 0.0) {
                    decay = 1.0;
                    stdev = sigma * std::sqrt(dt);
                } else {
                    decay = std::exp(-a * dt);
                    stdev = sigma * std::sqrt(-std::expm1(-2.0 * a * dt) / (2.0 * a));
                }
                r = b + (r - b) * decay + stdev * normal(rng);
                row[k + 1] = r;
            }
        }
    });

    return out;
}

double discount_factor(std::span<const double> path_rates, const TimeGrid& grid, double spread,
                       std::size_t to_index) {
    if (to_index >= grid.size()) {
        throw std::out_of_range("discount_factor: index past end of grid");
    }
    double integral = 0.0;
    for (std::size_t i = 0; i < to_index; ++i) {
        integral += (path_rates[i] + spread) * grid.dt(i);
    }
    return std::exp(-integral);
}

std::vector<double> rate_integrals(std::span<const double> path_rates, const TimeGrid& grid) {
    if (path_rates.size() != grid.size()) {
        throw std::invalid_argument("rate_integrals: path length does not match grid");
    }
    std::vector<double> cum(grid.size());
    double integral = 0.0;
    cum[0] = 0.0;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        integral += path_rates[i] * grid.dt(i);
        cum[i + 1] = integral;
    }
    return cum;
}

}  // namespace fundcost
