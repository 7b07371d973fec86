#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "fundcost/vasicek.hpp"

using fundcost::VasicekParams;

namespace {

VasicekParams reverting_params() {
    VasicekParams p;
    p.r0 = 0.01;
    p.mean_reversion = 0.5;
    p.long_run_mean = 0.03;
    p.sigma = 0.01;
    return p;
}

}  // namespace

TEST_CASE("vasicek: parameter validation") {
    VasicekParams p = reverting_params();
    p.validate();

    p.mean_reversion = -0.1;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = reverting_params();
    p.sigma = -1e-9;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = reverting_params();
    p.r0 = std::nan("");
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);

    // Negative rates are allowed, only non-finite ones are rejected.
    p = reverting_params();
    p.r0 = -0.02;
    p.long_run_mean = -0.01;
    p.validate();
}

TEST_CASE("vasicek: conditional moments match the closed form") {
    const VasicekParams p = reverting_params();
    // b + (r0 - b) e^{-a t} and sigma^2 (1 - e^{-2 a t}) / (2 a).
    CHECK(vasicek_mean(p, 0.0) == doctest::Approx(0.01).epsilon(1e-15));
    CHECK(vasicek_mean(p, 1.0) == doctest::Approx(0.01786938680574733).epsilon(1e-14));
    CHECK(vasicek_mean(p, 5.0) == doctest::Approx(0.028358300027522022).epsilon(1e-14));
    CHECK(vasicek_variance(p, 0.0) == 0.0);
    CHECK(vasicek_variance(p, 1.0) == doctest::Approx(6.321205588285577e-05).epsilon(1e-14));
    CHECK(vasicek_variance(p, 2.0) == doctest::Approx(8.646647167633873e-05).epsilon(1e-14));

    CHECK_THROWS_AS(vasicek_mean(p, -0.5), std::invalid_argument);
    CHECK_THROWS_AS(vasicek_variance(p, -0.5), std::invalid_argument);
}

TEST_CASE("vasicek: zero mean reversion reduces to Brownian motion") {
    VasicekParams p = reverting_params();
    p.mean_reversion = 0.0;
    CHECK(vasicek_mean(p, 3.0) == doctest::Approx(p.r0).epsilon(1e-15));
    CHECK(vasicek_variance(p, 3.0) == doctest::Approx(p.sigma * p.sigma * 3.0).epsilon(1e-14));
}

TEST_CASE("vasicek: bond price closed form") {
    VasicekParams p = reverting_params();
    CHECK(zero_coupon_bond_price(p, 0.02, 0.0) == 1.0);
    CHECK(zero_coupon_bond_price(p, 0.02, 1.0) ==
          doctest::Approx(0.9781238660592709).epsilon(1e-13));

    // a -> 0 limit: exp(sigma^2 tau^3 / 6 - r tau).
    p.mean_reversion = 0.0;
    CHECK(zero_coupon_bond_price(p, 0.03, 2.0) ==
          doctest::Approx(0.941890110560339).epsilon(1e-13));

    // Deterministic flat curve collapses to exp(-r tau).
    p.sigma = 0.0;
    CHECK(zero_coupon_bond_price(p, 0.03, 2.0) ==
          doctest::Approx(std::exp(-0.06)).epsilon(1e-14));

    CHECK_THROWS_AS(zero_coupon_bond_price(p, 0.02, -1.0), std::invalid_argument);
}

TEST_CASE("vasicek: bond price is decreasing in rate and below par for positive rates") {
    const VasicekParams p = reverting_params();
    double previous = 2.0;
    for (double r = 0.0; r <= 0.1; r += 0.01) {
        const double price = zero_coupon_bond_price(p, r, 3.0);
        CHECK(price < previous);
        CHECK(price > 0.0);
        previous = price;
    }
}
