#include <crossover/variance.hpp>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace crossover {

namespace {

constexpr double kTailBound = 8.0;
constexpr double kAbsoluteTolerance = 1e-6;
constexpr double kRelativeTolerance = 1e-10;
constexpr unsigned kMaxDepth = 15;

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 31>;

struct InfluenceParameters {
    double t;
    double below;
    double above;
    double mu_lower;
    double mu_upper;

    double operator()(double x) const {
        return x <= t ? (x - mu_lower) / below : (x - mu_upper) / above;
    }
};

InfluenceParameters population_parameters(const DistributionModel& model, double t) {
    const double below = model.cdf(t);
    const double above = model.survival(t);
    if (!(below > 0.0 && above > 0.0)) {
        throw std::domain_error("influence function requires 0 < F(t) < 1");
    }
    return {t, below, above, model.lower_moment(t) / below, model.upper_moment(t) / above};
}

// Pieces of [-8, 8] on which xi is smooth.
std::vector<std::pair<double, double>> pieces_around(double t) {
    if (t <= -kTailBound || t >= kTailBound) {
        return {{-kTailBound, kTailBound}};
    }
    return {{-kTailBound, t}, {t, kTailBound}};
}

double integrate_checked(const auto& f, double a, double b, double& error_budget) {
    double error = 0.0;
    const double value = Kronrod::integrate(f, a, b, kMaxDepth, kRelativeTolerance, &error);
    error_budget += error;
    return value;
}

std::pair<double, double> mean_and_sd(std::span<const double> values) {
    const double n = static_cast<double>(values.size());
    const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    return {mean, std::sqrt(ss / (n - 1.0))};
}

}  // namespace

InfluenceSeries influence_values(const Sample& sample, double t) {
    const auto xs = sample.values();
    double lower_sum = 0.0;
    double upper_sum = 0.0;
    std::size_t lower_count = 0;
    for (double x : xs) {
        if (x <= t) {
            lower_sum += x;
            ++lower_count;
        } else {
            upper_sum += x;
        }
    }
    const std::size_t n = xs.size();
    if (lower_count == 0 || lower_count == n) {
        throw std::domain_error("plug-in influence values require 0 < F_n(t) < 1");
    }
    const double below = static_cast<double>(lower_count) / static_cast<double>(n);
    const InfluenceParameters xi{t, below, 1.0 - below,
                                 lower_sum / static_cast<double>(lower_count),
                                 upper_sum / static_cast<double>(n - lower_count)};

    InfluenceSeries out{t, xi.mu_lower, xi.mu_upper, below, {}};
    out.values.reserve(n);
    for (double x : xs) out.values.push_back(xi(x));
    return out;
}

InfluenceSeries influence_values(const Sample& sample, const DistributionModel& model, double t) {
    const auto xi = population_parameters(model, t);
    InfluenceSeries out{t, xi.mu_lower, xi.mu_upper, xi.below, {}};
    out.values.reserve(sample.size());
    for (double x : sample.values()) out.values.push_back(xi(x));
    return out;
}

std::size_t default_bandwidth(std::size_t n) noexcept {
    return static_cast<std::size_t>(std::floor(1.5 * std::cbrt(static_cast<double>(n))));
}

double bartlett_long_run_variance(std::span<const double> series, std::size_t bandwidth) {
    const std::size_t n = series.size();
    if (n == 0 || bandwidth >= n) {
        throw std::invalid_argument("Bartlett bandwidth must be smaller than the series length");
    }
    const double mean = std::accumulate(series.begin(), series.end(), 0.0) / static_cast<double>(n);
    std::vector<double> centred(n);
    std::transform(series.begin(), series.end(), centred.begin(),
                   [mean](double v) { return v - mean; });

    auto autocovariance = [&](std::size_t lag) {
        double sum = 0.0;
        for (std::size_t i = lag; i < n; ++i) sum += centred[i] * centred[i - lag];
        return sum / static_cast<double>(n);
    };

    double estimate = autocovariance(0);
    for (std::size_t j = 1; j <= bandwidth; ++j) {
        const double weight = 1.0 - static_cast<double>(j) / static_cast<double>(bandwidth + 1);
        estimate += 2.0 * weight * autocovariance(j);
    }
    // The Bartlett weights give a positive semidefinite estimate; clamp rounding.
    return std::max(estimate, 0.0);
}

double long_run_variance(const Sample& sample, double t, std::optional<std::size_t> bandwidth) {
    const auto series = influence_values(sample, t);
    return bartlett_long_run_variance(series.values,
                                      bandwidth.value_or(default_bandwidth(sample.size())));
}

double influence_second_moment(const DistributionModel& model, double t) {
    const auto xi = population_parameters(model, t);
    double error = 0.0;
    double total = 0.0;
    for (const auto& [a, b] : pieces_around(t)) {
        total += integrate_checked(
            [&](double x) {
                const double v = xi(x);
                return v * v * model.pdf(x);
            },
            a, b, error);
    }
    if (error > kAbsoluteTolerance) {
        throw IntegrationError("second moment of the influence function did not converge");
    }
    return total;
}

double influence_cross_moment(const DistributionModel& model, double t, double rho) {
    if (!(rho > -1.0 && rho < 1.0)) {
        throw std::invalid_argument("lag correlation must lie in (-1, 1)");
    }
    const auto xi = population_parameters(model, t);
    const double one_minus = 1.0 - rho * rho;
    const double norm = 1.0 / (2.0 * std::numbers::pi * std::sqrt(one_minus));
    auto density = [=](double x, double y) {
        return norm * std::exp(-(x * x - 2.0 * rho * x * y + y * y) / (2.0 * one_minus));
    };

    const auto pieces = pieces_around(t);
    double outer_error = 0.0;
    double worst_inner_error = 0.0;
    double total = 0.0;
    for (const auto& [ax, bx] : pieces) {
        for (const auto& [ay, by] : pieces) {
            auto inner = [&](double x) {
                double inner_error = 0.0;
                const double value = integrate_checked(
                    [&](double y) { return xi(y) * density(x, y); }, ay, by, inner_error);
                worst_inner_error = std::max(worst_inner_error, inner_error);
                return xi(x) * value;
            };
            total += integrate_checked(inner, ax, bx, outer_error);
        }
    }
    // Each inner error is weighted by |xi(x)| over an outer width of 16.
    const double xi_bound = (kTailBound + std::max(std::abs(xi.mu_lower), std::abs(xi.mu_upper))) /
                            std::min(xi.below, xi.above);
    const double bound = outer_error + worst_inner_error * xi_bound * 2.0 * kTailBound;
    if (bound > kAbsoluteTolerance) {
        throw IntegrationError("lag cross-moment of the influence function did not converge");
    }
    return total;
}

double analytic_sigma_mdependent(const DistributionModel& model, double t,
                                 std::span<const double> lag_correlations) {
    if (dynamic_cast<const StandardNormal*>(&model) == nullptr) {
        throw std::invalid_argument("analytic sigma is defined for the standard normal model only");
    }
    double sigma = influence_second_moment(model, t);
    for (double rho : lag_correlations) {
        if (rho == 0.0) continue;  // independent lags contribute (E xi)^2 = 0
        sigma += 2.0 * influence_cross_moment(model, t, rho);
    }
    return sigma;
}

double split_point_variance(double sigma_t0, double t_prime) {
    if (!(t_prime < 0.0)) {
        throw std::invalid_argument("asymptotic variance needs T'(t0) < 0");
    }
    if (!(sigma_t0 >= 0.0)) {
        throw std::invalid_argument("long-run variance must be nonnegative");
    }
    return sigma_t0 / (t_prime * t_prime);
}

double estimate_crossover_slope(const Sample& sample, const CrossoverCurve& curve, double t) {
    const auto bp = curve.breakpoints();
    const std::size_t segments = curve.segment_count();
    if (segments < 2) {
        throw std::domain_error("slope estimate needs at least two segments");
    }
    const double n = static_cast<double>(sample.size());
    double half_width = 1.06 * mean_and_sd(sample.values()).second * std::pow(n, -0.2);

    const std::size_t wanted = std::min<std::size_t>(3, segments);
    std::vector<std::size_t> chosen;
    for (;;) {
        chosen.clear();
        for (std::size_t k = 0; k < segments; ++k) {
            const double mid = 0.5 * (bp[k] + bp[k + 1]);
            if (std::abs(mid - t) <= half_width) chosen.push_back(k);
        }
        if (chosen.size() >= wanted) break;
        half_width *= 2.0;
    }

    double mx = 0.0;
    double my = 0.0;
    for (std::size_t k : chosen) {
        const double mid = 0.5 * (bp[k] + bp[k + 1]);
        mx += mid;
        my += curve.intercepts()[k] - 2.0 * mid;
    }
    mx /= static_cast<double>(chosen.size());
    my /= static_cast<double>(chosen.size());
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t k : chosen) {
        const double mid = 0.5 * (bp[k] + bp[k + 1]);
        const double dx = mid - mx;
        sxy += dx * (curve.intercepts()[k] - 2.0 * mid - my);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

std::pair<double, double> SplitVarianceEstimate::confidence_interval(double level) const {
    if (!(level > 0.0 && level < 1.0)) {
        throw std::domain_error("confidence level must lie in (0, 1)");
    }
    const double z = normal_quantile(0.5 + 0.5 * level);
    const double half = z * std::sqrt(variance / static_cast<double>(split.n));
    return {split.value - half, split.value + half};
}

SplitVarianceEstimate estimate_split_variance(const Sample& sample,
                                              std::optional<std::size_t> bandwidth,
                                              const DistributionModel* model) {
    const CrossoverCurve curve(sample);
    SplitVarianceEstimate out;
    out.split = sample_split_point(curve, sample.size());
    if (!out.split.finite()) {
        throw std::domain_error("split point is not finite; no variance estimate");
    }
    out.bandwidth = bandwidth.value_or(default_bandwidth(sample.size()));
    out.sigma = long_run_variance(sample, out.split.value, out.bandwidth);
    out.slope = model != nullptr ? theoretical_crossover_derivative(*model, out.split.value)
                                 : estimate_crossover_slope(sample, curve, out.split.value);
    if (!(out.slope < 0.0)) {
        throw std::domain_error("estimated T'(t_n) is not negative");
    }
    out.variance = split_point_variance(out.sigma, out.slope);
    return out;
}

}  // namespace crossover
