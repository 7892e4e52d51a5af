#pragma once

#include <limits>

namespace crossover {

/// Analytic univariate distribution with an invertible cdf.
///
/// Truncated first moments default to adaptive quadrature of the quantile
/// function, since int_{-inf}^t x dF = int_0^{F(t)} Q(q) dq. Models with closed
/// forms override them.
class DistributionModel {
public:
    virtual ~DistributionModel() = default;

    virtual double cdf(double t) const = 0;
    /// 1 - F(t), overridden where the complement can be formed without cancellation.
    virtual double survival(double t) const { return 1.0 - cdf(t); }
    virtual double pdf(double t) const = 0;
    /// Q(p) for p in (0, 1).
    virtual double quantile(double p) const = 0;

    /// L(t) = int_{-inf}^t x dF(x)
    virtual double lower_moment(double t) const;
    /// U(t) = int_t^{inf} x dF(x)
    virtual double upper_moment(double t) const;
    virtual double mean() const;

    virtual double support_lower() const { return -std::numeric_limits<double>::infinity(); }
    virtual double support_upper() const { return std::numeric_limits<double>::infinity(); }
};

/// N(0, 1). Phi and phi via std::erfc/std::exp, quantile via inverse erfc.
class StandardNormal final : public DistributionModel {
public:
    double cdf(double t) const override;
    double survival(double t) const override;
    double pdf(double t) const override;
    double quantile(double p) const override;

    double lower_moment(double t) const override { return -pdf(t); }
    double upper_moment(double t) const override { return pdf(t); }
    double mean() const override { return 0.0; }
};

inline StandardNormal standard_normal_model() { return {}; }

/// Standard normal quantile as a free function, used by generators and
/// confidence intervals.
double normal_quantile(double p);
double normal_cdf(double t);

}  // namespace crossover
