#include "fundcost/vasicek.hpp"

#include <cmath>
#include <stdexcept>

namespace fundcost {

void VasicekParams::validate() const {
    if (!(mean_reversion >= 0.0))
        throw std::invalid_argument("VasicekParams: mean_reversion must be >= 0");
    if (!(sigma >= 0.0)) throw std::invalid_argument("VasicekParams: sigma must be >= 0");
    if (!std::isfinite(r0) || !std::isfinite(long_run_mean))
        throw std::invalid_argument("VasicekParams: rates must be finite");
}

double vasicek_mean(const VasicekParams& p, double t) {
    if (t < 0.0) throw std::invalid_argument("vasicek_mean: t must be >= 0");
    return p.long_run_mean + (p.r0 - p.long_run_mean) * std::exp(-p.mean_reversion * t);
}

double vasicek_variance(const VasicekParams& p, double t) {
    if (t < 0.0) throw std::invalid_argument("vasicek_variance: t must be >= 0");
    const double a = p.mean_reversion;
    if (a == 0.0) return p.sigma * p.sigma * t;
    return p.sigma * p.sigma * (-std::expm1(-2.0 * a * t)) / (2.0 * a);
}

double zero_coupon_bond_price(const VasicekParams& p, double r_now, double tau) {
    if (tau < 0.0) throw std::invalid_argument("zero_coupon_bond_price: tau must be >= 0");
    if (tau == 0.0) return 1.0;
    const double a = p.mean_reversion;
    const double s2 = p.sigma * p.sigma;
    if (a == 0.0) {
        // dr = sigma dW: the integrated rate is Gaussian with mean r*tau and
        // variance sigma^2 tau^3 / 3.
        double A = s2 * tau * tau * tau / 6.0;
        return std::exp(A - r_now * tau);
    }
    double B = -std::expm1(-a * tau) / a;
    double A = (B - tau) * (a * a * p.long_run_mean - 0.5 * s2) / (a * a) - s2 * B * B / (4.0 * a);
    return std::exp(A - B * r_now);
}

}  // namespace fundcost
