#pragma once

namespace fundcost {

// Vasicek short rate: dr = a (b - r) dt + sigma dW. Negative rates are a
// legitimate model outcome and are not clamped anywhere.
struct VasicekParams {
    double r0 = 0.01;
    double mean_reversion = 0.5;  // a
    double long_run_mean = 0.01;  // b
    double sigma = 0.01;

    // Throws std::invalid_argument on a < 0 or sigma < 0.
    void validate() const;
};

// Conditional moments of r(t) given r(0) = r0.
double vasicek_mean(const VasicekParams& p, double t);
double vasicek_variance(const VasicekParams& p, double t);

// Zero-coupon bond price P(t, t+tau) = exp(A(tau) - B(tau) r) under the
// affine closed form, with the a -> 0 limit handled exactly (B = tau,
// A = sigma^2 tau^3 / 6).
double zero_coupon_bond_price(const VasicekParams& p, double r_now, double tau);

}  // namespace fundcost
