#pragma once

#include <crossover/crossover.hpp>
#include <crossover/distribution.hpp>
#include <crossover/sample.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace crossover {

/// Raised when an adaptive quadrature cannot certify its tolerance.
class IntegrationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Influence values
///
///   xi(X) = (X - mu_l(t)) / F(t) * 1{X <= t} + (X - mu_u(t)) / (1 - F(t)) * 1{X > t}
///
/// whose partial sums linearise sqrt(n) (T_n(t) - T(t)).
struct InfluenceSeries {
    double t = 0.0;
    double mu_lower = 0.0;  // mean of X given X <= t
    double mu_upper = 0.0;  // mean of X given X > t
    double cdf_at_t = 0.0;  // F(t) or F_n(t)
    std::vector<double> values;
};

/// Plug-in version: F_n and empirical truncated means. Throws std::domain_error
/// unless 0 < F_n(t) < 1.
InfluenceSeries influence_values(const Sample& sample, double t);

/// Population version: F, mu_l, mu_u from the model, applied to the observations.
InfluenceSeries influence_values(const Sample& sample, const DistributionModel& model, double t);

/// floor(1.5 * n^(1/3))
std::size_t default_bandwidth(std::size_t n) noexcept;

/// Bartlett lag-window estimate gamma_0 + 2 sum_{j=1}^{b} (1 - j/(b+1)) gamma_j with
/// mean-centred autocovariances (divisor n). Throws std::invalid_argument if b >= n.
double bartlett_long_run_variance(std::span<const double> series, std::size_t bandwidth);

/// Long-run variance of the plug-in influence series at t.
double long_run_variance(const Sample& sample, double t,
                         std::optional<std::size_t> bandwidth = std::nullopt);

/// E xi(X)^2 under the model, by one-dimensional adaptive quadrature.
double influence_second_moment(const DistributionModel& model, double t);

/// E xi(X) xi(Y) for (X, Y) standard bivariate normal with correlation rho.
/// Integrated over [-8, 8]^2, split at t, absolute tolerance 1e-6.
double influence_cross_moment(const DistributionModel& model, double t, double rho);

/// sigma_t = E xi_0^2 + 2 sum_k E xi_0 xi_k for a stationary Gaussian sequence
/// with the given lag-k correlations (finitely many nonzero lags). Requires the
/// standard normal model.
double analytic_sigma_mdependent(const DistributionModel& model, double t,
                                 std::span<const double> lag_correlations);

/// Asymptotic variance sigma_{t0} / T'(t0)^2 of sqrt(n)(t_n - t0).
double split_point_variance(double sigma_t0, double t_prime);

/// Data-based T'(t): least-squares slope of T_n at segment midpoints within
/// t +- h, h = 1.06 * sd * n^(-1/5); the window widens until three segments fit.
double estimate_crossover_slope(const Sample& sample, const CrossoverCurve& curve, double t);

struct SplitVarianceEstimate {
    SplitEstimate split;
    std::size_t bandwidth = 0;
    double sigma = 0.0;     // long-run variance of the influence series at t_n
    double slope = 0.0;     // T'(t_n), from the model when given, else from data
    double variance = 0.0;  // sigma / slope^2, asymptotic variance of sqrt(n) t_n

    /// t_n -+ z * sqrt(variance / n). Throws std::domain_error for level outside (0, 1).
    std::pair<double, double> confidence_interval(double level) const;
};

/// Full plug-in pipeline around the sample split point. Throws std::domain_error
/// when the split point is a sentinel or the slope estimate is not negative.
SplitVarianceEstimate estimate_split_variance(const Sample& sample,
                                              std::optional<std::size_t> bandwidth = std::nullopt,
                                              const DistributionModel* model = nullptr);

}  // namespace crossover
