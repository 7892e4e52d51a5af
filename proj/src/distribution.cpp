#include <crossover/distribution.hpp>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/erf.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace crossover {

namespace {

constexpr double kQuadratureTolerance = 1e-10;

// int_a^b Q(q) dq. The endpoints are excluded by the Gauss-Kronrod nodes, so
// infinite tails of Q at 0 and 1 are never evaluated.
double integrate_quantile(const DistributionModel& model, double a, double b) {
    if (b <= a) {
        return 0.0;
    }
    auto q = [&model](double p) { return model.quantile(p); };
    double error = 0.0;
    const double value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        q, a, b, 20, kQuadratureTolerance, &error);
    return value;
}

}  // namespace

double DistributionModel::lower_moment(double t) const {
    return integrate_quantile(*this, 0.0, cdf(t));
}

double DistributionModel::upper_moment(double t) const {
    return integrate_quantile(*this, cdf(t), 1.0);
}

double DistributionModel::mean() const { return integrate_quantile(*this, 0.0, 1.0); }

double normal_cdf(double t) { return 0.5 * std::erfc(-t / std::numbers::sqrt2); }

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::domain_error("normal quantile requires p in (0, 1)");
    }
    return -std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * p);
}

double StandardNormal::cdf(double t) const { return normal_cdf(t); }

double StandardNormal::survival(double t) const {
    return 0.5 * std::erfc(t / std::numbers::sqrt2);
}

double StandardNormal::pdf(double t) const {
    return std::exp(-0.5 * t * t) * (0.5 * std::numbers::inv_sqrtpi * std::numbers::sqrt2);
}

double StandardNormal::quantile(double p) const { return normal_quantile(p); }

}  // namespace crossover
