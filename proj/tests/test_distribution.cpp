#include <crossover/distribution.hpp>

#include "oracles.hpp"

#include <catch_amalgamated.hpp>

using namespace crossover;
using Catch::Matchers::WithinAbs;

namespace {

// Standard normal without the closed-form moment overrides, so the base
// class quadrature path is exercised.
class QuadratureNormal final : public DistributionModel {
public:
    double cdf(double t) const override { return normal_cdf(t); }
    double pdf(double t) const override { return oracle::phi(t); }
    double quantile(double p) const override { return normal_quantile(p); }
};

}  // namespace

TEST_CASE("standard normal truncated moments", "[distribution]") {
    const auto model = standard_normal_model();
    const double expected = oracle::lower_moment(0.0);
    CHECK_THAT(expected, WithinAbs(-0.398942280401, 1e-10));
    CHECK_THAT(model.lower_moment(0.0), WithinAbs(expected, 1e-10));
    CHECK_THAT(model.upper_moment(0.0), WithinAbs(oracle::upper_moment(0.0), 1e-10));
    CHECK(model.cdf(0.0) == 0.5);
    CHECK_THAT(model.lower_moment(1.3), WithinAbs(oracle::lower_moment(1.3), 1e-10));
}

TEST_CASE("standard normal has zero mean at every truncation point", "[distribution][property]") {
    const auto model = standard_normal_model();
    for (double t = -6.0; t <= 6.0; t += 0.05) {
        CHECK(std::abs(model.lower_moment(t) + model.upper_moment(t)) < 1e-10);
    }
}

TEST_CASE("quantile inverts the cdf", "[distribution][property]") {
    const auto model = standard_normal_model();
    for (double p = 0.001; p <= 0.999; p += 0.001) {
        CHECK(std::abs(model.cdf(model.quantile(p)) - p) < 1e-8);
    }
    CHECK_THROWS_AS(model.quantile(0.0), std::domain_error);
    CHECK_THROWS_AS(model.quantile(1.0), std::domain_error);
}

TEST_CASE("cdf and survival agree with an erf reference", "[distribution]") {
    const auto model = standard_normal_model();
    for (double t = -8.0; t <= 8.0; t += 0.25) {
        CHECK_THAT(model.cdf(t), WithinAbs(oracle::Phi(t), 1e-15));
        CHECK_THAT(model.survival(t), WithinAbs(1.0 - oracle::Phi(t), 1e-15));
        CHECK(model.pdf(t) >= 0.0);
    }
}

TEST_CASE("default truncated moments integrate the quantile function", "[distribution]") {
    const QuadratureNormal model;
    for (double t : {-2.0, -0.5, 0.0, 0.7, 1.9}) {
        CHECK_THAT(model.lower_moment(t), WithinAbs(-oracle::phi(t), 1e-8));
        CHECK_THAT(model.upper_moment(t), WithinAbs(oracle::phi(t), 1e-8));
    }
    CHECK_THAT(model.mean(), WithinAbs(0.0, 1e-8));
}
