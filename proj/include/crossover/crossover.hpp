#pragma once

#include <crossover/distribution.hpp>
#include <crossover/sample.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace crossover {

/// Direct O(n) evaluation of the sample cross-over function
///
///   T_n(t) = sum_{X_i <= t} X_i / #{X_i <= t} + sum_{X_i > t} X_i / #{X_i > t} - 2t
///
/// Requires min <= t < max; throws std::domain_error otherwise.
double sample_crossover_eval(const Sample& sample, double t);

/// Exact piecewise-affine representation of T_n.
///
/// Segment k covers [breakpoints[k], breakpoints[k+1]) and T_n(t) = intercept[k] - 2t
/// there, where intercept[k] is the sum of the lower and upper truncated means.
class CrossoverCurve {
public:
    /// Throws std::invalid_argument when n < 2 or all values coincide.
    explicit CrossoverCurve(const Sample& sample);

    std::size_t segment_count() const noexcept { return intercepts_.size(); }
    std::span<const double> breakpoints() const noexcept { return breakpoints_; }
    std::span<const double> intercepts() const noexcept { return intercepts_; }

    double lower() const noexcept { return breakpoints_.front(); }
    double upper() const noexcept { return breakpoints_.back(); }

    /// Index of the segment containing t; t must lie in [lower, upper).
    std::size_t segment_of(double t) const;

    /// Right-continuous value of T_n at t in [lower, upper).
    double operator()(double t) const;

    /// lim_{s -> t-} T_n(s) for t in (lower, upper].
    double left_limit(double t) const;

    /// Zero of the affine piece on segment k (may fall outside the segment).
    double segment_zero(std::size_t k) const noexcept { return 0.5 * intercepts_[k]; }

private:
    std::vector<double> breakpoints_;
    std::vector<double> intercepts_;
};

inline CrossoverCurve build_crossover_curve(const Sample& sample) { return CrossoverCurve(sample); }

enum class SplitOutcome {
    Finite,
    NegativeInfinity,  // T_n < 0 on the whole domain
    PositiveInfinity,  // T_n > 0 on the whole domain
};

struct SplitEstimate {
    SplitOutcome outcome = SplitOutcome::Finite;
    double value = 0.0;  // meaningful only when outcome == Finite
    std::size_t n = 0;

    bool finite() const noexcept { return outcome == SplitOutcome::Finite; }
    std::optional<double> finite_value() const {
        return finite() ? std::optional<double>(value) : std::nullopt;
    }
};

/// sup{t : T_n(t) >= 0}, found exactly by scanning segments right to left.
SplitEstimate sample_split_point(const CrossoverCurve& curve, std::size_t n);
SplitEstimate sample_split_point(const Sample& sample);

/// T(t) = L(t)/F(t) + U(t)/(1 - F(t)) - 2t. Throws std::domain_error when F(t) is 0 or 1.
double theoretical_crossover(const DistributionModel& model, double t);

/// Closed-form derivative T'(t).
double theoretical_crossover_derivative(const DistributionModel& model, double t);

/// Hartigan's split function B(Q, p), the between-cluster sum of squares.
double split_function(const DistributionModel& model, double p);

/// G(p) = (1/p) int_0^p Q + (1/(1-p)) int_p^1 Q - 2 Q(p); equals T(Q(p)).
double crossover_G(const DistributionModel& model, double p);

}  // namespace crossover
