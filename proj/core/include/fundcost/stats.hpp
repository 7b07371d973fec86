#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>

namespace fundcost {

// Mean and standard error of a Monte Carlo sample.
struct McEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::size_t n_samples = 0;
};

// Neumaier-compensated sum over a fixed index order. Deterministic for a given
// input sequence and accurate to a few ulps regardless of sample count.
inline double compensated_sum(std::span<const double> xs) {
    double sum = 0.0;
    double comp = 0.0;
    for (double x : xs) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    return sum + comp;
}

// Sample mean with standard error of the mean (sample std dev / sqrt(n)).
inline McEstimate mean_and_se(std::span<const double> xs) {
    if (xs.empty()) throw std::invalid_argument("mean_and_se: empty sample");
    const std::size_t n = xs.size();
    McEstimate est;
    est.n_samples = n;
    est.value = compensated_sum(xs) / static_cast<double>(n);
    if (n == 1) return est;
    double ss = 0.0;
    double comp = 0.0;
    for (double x : xs) {
        double d = x - est.value;
        double term = d * d;
        double t = ss + term;
        if (std::abs(ss) >= term) {
            comp += (ss - t) + term;
        } else {
            comp += (term - t) + ss;
        }
        ss = t;
    }
    ss += comp;
    double var = ss / static_cast<double>(n - 1);
    est.std_error = std::sqrt(var / static_cast<double>(n));
    return est;
}

}  // namespace fundcost
