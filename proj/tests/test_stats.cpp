#include <atomic>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "fundcost/parallel.hpp"
#include "fundcost/stats.hpp"

using namespace fundcost;

TEST_CASE("stats: compensated sum survives cancellation") {
    const std::vector<double> values = {1e16, 1.0, -1e16};
    CHECK(compensated_sum(values) == 1.0);

    std::vector<double> many(1000, 0.1);
    CHECK(compensated_sum(many) == doctest::Approx(100.0).epsilon(1e-15));
}

TEST_CASE("stats: mean and standard error") {
    const std::vector<double> values = {1.0, 2.0, 3.0, 4.0};
    const McEstimate estimate = mean_and_se(values);
    CHECK(estimate.value == doctest::Approx(2.5).epsilon(1e-15));
    // Sample variance 5/3, SE = sqrt(5/12).
    CHECK(estimate.std_error == doctest::Approx(std::sqrt(5.0 / 12.0)).epsilon(1e-14));
    CHECK(estimate.n_samples == 4);

    const std::vector<double> single = {7.0};
    CHECK(mean_and_se(single).value == 7.0);
    CHECK(mean_and_se(single).std_error == 0.0);

    CHECK_THROWS_AS(mean_and_se(std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("parallel: chunks cover the range exactly once") {
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(1000, 4, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) hits[i].fetch_add(1);
    });
    for (const auto& h : hits) CHECK(h.load() == 1);
}

TEST_CASE("parallel: degenerate shapes run inline") {
    std::vector<int> hits(10, 0);
    parallel_for(10, 1, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) hits[i] += 1;
    });
    for (int h : hits) CHECK(h == 1);

    bool called = false;
    parallel_for(0, 4, [&](std::size_t, std::size_t) { called = true; });
    CHECK_FALSE(called);

    CHECK_THROWS_AS(parallel_for(10, -1, [](std::size_t, std::size_t) {}),
                    std::invalid_argument);
}
