#include <stdexcept>

#include "doctest.h"
#include "fundcost/time_grid.hpp"

using fundcost::TimeGrid;

TEST_CASE("time_grid: monthly five year grid with semiannual coupons") {
    const TimeGrid grid = TimeGrid::make(5.0, 12, 2);
    CHECK(grid.size() == 61);
    CHECK(grid.last_index() == 60);
    CHECK(grid.maturity() == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(grid.times.front() == 0.0);
    CHECK(grid.dt(0) == doctest::Approx(1.0 / 12.0).epsilon(1e-15));
    CHECK(grid.dt(37) == doctest::Approx(1.0 / 12.0).epsilon(1e-15));
    CHECK(grid.payment_period() == doctest::Approx(0.5).epsilon(1e-15));

    REQUIRE(grid.payment_indices.size() == 11);
    CHECK(grid.payment_indices.front() == 0);
    CHECK(grid.payment_indices.back() == 60);
    for (std::size_t i = 0; i < grid.payment_indices.size(); ++i)
        CHECK(grid.payment_indices[i] == 6 * i);
    grid.validate();
}

TEST_CASE("time_grid: coarse grid where every step is a payment date") {
    const TimeGrid grid = TimeGrid::make(1.5, 2, 2);
    CHECK(grid.size() == 4);
    REQUIRE(grid.payment_indices.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(grid.payment_indices[i] == i);
}

TEST_CASE("time_grid: times are strictly increasing and end at maturity") {
    const TimeGrid grid = TimeGrid::make(3.0, 4, 2);
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) CHECK(grid.times[i] < grid.times[i + 1]);
    CHECK(grid.times.back() == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("time_grid: rejects bad construction arguments") {
    CHECK_THROWS_AS(TimeGrid::make(0.0, 12, 2), std::invalid_argument);
    CHECK_THROWS_AS(TimeGrid::make(-1.0, 12, 2), std::invalid_argument);
    CHECK_THROWS_AS(TimeGrid::make(5.0, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(TimeGrid::make(5.0, 12, 0), std::invalid_argument);
    CHECK_THROWS_AS(TimeGrid::make(5.0, 5, 2), std::invalid_argument);
}

TEST_CASE("time_grid: validate flags corrupted grids") {
    TimeGrid grid = TimeGrid::make(2.0, 12, 2);
    grid.times[3] = grid.times[5];
    CHECK_THROWS_AS(grid.validate(), std::invalid_argument);

    TimeGrid no_payments = TimeGrid::make(2.0, 12, 2);
    no_payments.payment_indices.clear();
    CHECK_THROWS_AS(no_payments.validate(), std::invalid_argument);
}
