#include <crossover/crossover.hpp>

#include "oracles.hpp"

#include <catch_amalgamated.hpp>

#include <numbers>
#include <random>

using namespace crossover;
using Catch::Matchers::WithinAbs;

namespace {

std::vector<double> random_values(std::mt19937_64& rng, std::size_t n, bool ties) {
    std::normal_distribution<double> normal;
    std::vector<double> xs(n);
    for (auto& x : xs) x = ties ? std::round(normal(rng) * 3.0) / 3.0 : normal(rng);
    return xs;
}

}  // namespace

TEST_CASE("direct evaluation of the sample cross-over function", "[crossover]") {
    CHECK(sample_crossover_eval(Sample({-1.0, 1.0}), 0.0) == 0.0);
    CHECK(sample_crossover_eval(Sample({0.0, 2.0}), 0.5) == 1.0);
    CHECK(sample_crossover_eval(Sample({0.0, 2.0}), 1.5) == -1.0);
    CHECK_THROWS_AS(sample_crossover_eval(Sample({0.0, 2.0}), 2.0), std::domain_error);
    CHECK_THROWS_AS(sample_crossover_eval(Sample({0.0, 2.0}), -0.1), std::domain_error);
}

TEST_CASE("curve construction by hand", "[crossover]") {
    const CrossoverCurve two(Sample({0.0, 2.0}));
    REQUIRE(two.segment_count() == 1);
    CHECK(two.intercepts()[0] == 2.0);
    CHECK(two(0.0) == 2.0);
    CHECK(two(1.0) == 0.0);
    CHECK(two.left_limit(2.0) == -2.0);

    const CrossoverCurve three(Sample({1.0, 0.0, -1.0}));
    REQUIRE(three.segment_count() == 2);
    CHECK_THAT(three.intercepts()[0], WithinAbs(-0.5, 1e-15));
    CHECK_THAT(three.intercepts()[1], WithinAbs(0.5, 1e-15));
}

TEST_CASE("curve rejects degenerate samples", "[crossover]") {
    CHECK_THROWS_AS(CrossoverCurve(Sample({1.0})), std::invalid_argument);
    CHECK_THROWS_AS(CrossoverCurve(Sample({3.0, 3.0, 3.0})), std::invalid_argument);
    CHECK_THROWS_AS(sample_split_point(Sample({3.0, 3.0})), std::invalid_argument);
}

TEST_CASE("curve matches direct summation, including ties", "[crossover][property]") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::size_t> size(2, 200);
    for (int rep = 0; rep < 40; ++rep) {
        const auto xs = random_values(rng, size(rng), rep % 2 == 0);
        const Sample s(xs);
        if (!s.nondegenerate()) continue;
        const CrossoverCurve curve(s);
        std::uniform_real_distribution<double> at(s.min(), s.max());
        for (int i = 0; i < 1000; ++i) {
            const double t = at(rng);
            if (t >= s.max()) continue;
            CHECK(std::abs(curve(t) - oracle::sample_crossover(xs, t)) <= 1e-12);
        }
        for (double b : curve.breakpoints()) {
            if (b < s.max()) CHECK(std::abs(curve(b) - oracle::sample_crossover(xs, b)) <= 1e-12);
        }
    }
}

TEST_CASE("slope is -2 inside each segment and jumps are upward", "[crossover][property]") {
    std::mt19937_64 rng(7);
    const auto xs = random_values(rng, 150, false);
    const CrossoverCurve curve{Sample(xs)};
    const auto bp = curve.breakpoints();
    for (std::size_t k = 0; k + 1 < bp.size(); ++k) {
        const double a = bp[k];
        const double b = 0.5 * (bp[k] + bp[k + 1]);
        CHECK_THAT((curve(b) - curve(a)) / (b - a), WithinAbs(-2.0, 1e-8));
        if (k > 0) CHECK(curve(bp[k]) >= curve.left_limit(bp[k]));
    }
}

TEST_CASE("split point of small samples", "[crossover]") {
    const auto pair = sample_split_point(Sample({-1.0, 1.0}));
    REQUIRE(pair.finite());
    CHECK(pair.value == 0.0);
    CHECK(pair.n == 2);

    const auto two = sample_split_point(Sample({0.0, 2.0}));
    REQUIRE(two.finite());
    CHECK(two.value == 1.0);

    const auto three = sample_split_point(Sample({-1.0, 0.0, 1.0}));
    REQUIRE(three.finite());
    CHECK_THAT(three.value, WithinAbs(0.25, 1e-15));
}

TEST_CASE("split point is the supremum of the nonnegative set", "[crossover][property]") {
    // Checked against direct summation: T_n(t_n) = 0 and T_n < 0 at every
    // breakpoint to the right. Between breakpoints T_n decreases, so this
    // covers the whole of (t_n, X_(n)).
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::size_t> size(2, 300);
    for (int rep = 0; rep < 200; ++rep) {
        const auto xs = random_values(rng, size(rng), rep % 3 == 0);
        const Sample s(xs);
        if (!s.nondegenerate()) continue;
        const auto split = sample_split_point(s);
        REQUIRE(split.finite());
        CHECK(std::abs(oracle::sample_crossover(xs, split.value)) <= 1e-12);
        for (double b : CrossoverCurve(s).breakpoints()) {
            if (b > split.value && b < s.max()) CHECK(oracle::sample_crossover(xs, b) < 0.0);
        }
        CHECK(oracle::sample_crossover(xs, s.min()) > 0.0);
    }
}

TEST_CASE("split point is equivariant under positive affine maps", "[crossover][property]") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> scale(0.1, 10.0);
    std::uniform_real_distribution<double> shift(-10.0, 10.0);
    for (int rep = 0; rep < 100; ++rep) {
        const Sample s(random_values(rng, 50 + static_cast<std::size_t>(rep), false));
        const double u = scale(rng);
        const double v = shift(rng);
        const auto base = sample_split_point(s);
        const auto mapped = sample_split_point(s.affine(u, v));
        REQUIRE(mapped.finite());
        CHECK(std::abs(mapped.value - (u * base.value + v)) <= 1e-12);
    }
}

TEST_CASE("theoretical cross-over function for the standard normal", "[crossover]") {
    const StandardNormal model;
    CHECK(std::abs(theoretical_crossover(model, 0.0)) < 1e-12);

    const double F1 = oracle::Phi(1.0);
    const double expected = oracle::lower_moment(1.0) / F1 + oracle::upper_moment(1.0) / (1.0 - F1) - 2.0;
    CHECK_THAT(theoretical_crossover(model, 1.0), WithinAbs(expected, 1e-9));
    CHECK(theoretical_crossover(model, 1.0) < 0.0);
    CHECK_THAT(theoretical_crossover(model, -1.0), WithinAbs(-theoretical_crossover(model, 1.0), 1e-12));
    CHECK_THROWS_AS(theoretical_crossover(model, 40.0), std::domain_error);
}

TEST_CASE("theoretical cross-over derivative", "[crossover]") {
    const StandardNormal model;
    // 4 phi(0) * 2 phi(0) - 2 = 4/pi - 2
    const double slope = theoretical_crossover_derivative(model, 0.0);
    CHECK_THAT(slope, WithinAbs(4.0 / std::numbers::pi - 2.0, 1e-14));
    CHECK_THAT(slope, WithinAbs(-0.7268, 1e-3));

    const double h = 1e-5;
    for (double t : {-1.5, -0.5, 0.0, 0.3, 1.2}) {
        const double fd = (theoretical_crossover(model, t + h) - theoretical_crossover(model, t - h)) / (2 * h);
        CHECK_THAT(theoretical_crossover_derivative(model, t), WithinAbs(fd, 1e-6));
    }
    CHECK_THAT(theoretical_crossover_derivative(model, 0.5),
               WithinAbs(theoretical_crossover_derivative(model, -0.5), 1e-12));
}

TEST_CASE("split function B(Q, p)", "[crossover]") {
    const StandardNormal model;
    CHECK_THAT(split_function(model, 0.5), WithinAbs(2.0 / std::numbers::pi, 1e-12));

    // Quadrature on the quantile scale as an independent check.
    const double p = 0.3;
    const double q = model.quantile(p);
    const double lower = oracle::lower_moment(q);
    const double upper = oracle::upper_moment(q);
    CHECK_THAT(split_function(model, p),
               WithinAbs(lower * lower / p + upper * upper / (1 - p), 1e-9));

    CHECK_THAT(split_function(model, 0.3), WithinAbs(split_function(model, 0.7), 1e-12));

    double best_p = 0.0;
    double best = -1.0;
    for (int i = 1; i <= 99; ++i) {
        const double pi = i / 100.0;
        if (split_function(model, pi) > best) {
            best = split_function(model, pi);
            best_p = pi;
        }
    }
    CHECK_THAT(best_p, WithinAbs(0.5, 1e-12));
    CHECK_THROWS_AS(split_function(model, 0.0), std::domain_error);
}

TEST_CASE("G on the probability scale equals T composed with Q", "[crossover]") {
    const StandardNormal model;
    CHECK(std::abs(crossover_G(model, 0.5)) < 1e-12);
    for (int i = 1; i <= 99; ++i) {
        const double p = i / 100.0;
        CHECK(std::abs(crossover_G(model, p) - theoretical_crossover(model, model.quantile(p))) < 1e-9);
    }
    const double q = model.quantile(0.9);
    const double expected = oracle::lower_moment(q) / 0.9 + oracle::upper_moment(q) / 0.1 - 2 * q;
    CHECK_THAT(crossover_G(model, 0.9), WithinAbs(expected, 1e-8));
    CHECK(crossover_G(model, 0.9) < 0.0);
    CHECK_THROWS_AS(crossover_G(model, 1.0), std::domain_error);
}
