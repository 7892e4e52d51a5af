#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace crossover {

/// A finite univariate sample that keeps both the observation order (needed
/// for dependence-aware statistics) and the sorted order statistics.
class Sample {
public:
    /// Throws std::invalid_argument on an empty input or any non-finite value.
    explicit Sample(std::vector<double> values);

    std::span<const double> values() const noexcept { return values_; }
    std::span<const double> sorted() const noexcept { return sorted_; }
    std::size_t size() const noexcept { return values_.size(); }

    double min() const noexcept { return sorted_.front(); }
    double max() const noexcept { return sorted_.back(); }

    /// True when at least two distinct values are present.
    bool nondegenerate() const noexcept { return sorted_.front() < sorted_.back(); }

    /// Sample with every value mapped to scale * x + shift.
    Sample affine(double scale, double shift) const;

private:
    std::vector<double> values_;
    std::vector<double> sorted_;
};

/// Right-continuous empirical distribution function of a sample.
class EmpiricalCdf {
public:
    explicit EmpiricalCdf(const Sample& sample) : sample_(&sample) {}

    /// #{i : X_i <= t} / n
    double operator()(double t) const noexcept;

    /// #{i : X_i <= t}
    std::size_t count_at_or_below(double t) const noexcept;

private:
    const Sample* sample_;
};

inline double empirical_cdf_eval(const Sample& sample, double t) noexcept {
    return EmpiricalCdf(sample)(t);
}

}  // namespace crossover
