#include <crossover/crossover.hpp>

#include <algorithm>
#include <stdexcept>

namespace crossover {

namespace {

void require_open_unit(double p, const char* what) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::domain_error(std::string(what) + " requires p in (0, 1)");
    }
}

}  // namespace

double sample_crossover_eval(const Sample& sample, double t) {
    if (!(t >= sample.min() && t < sample.max())) {
        throw std::domain_error("sample cross-over function is defined on [X_(1), X_(n))");
    }
    double lower_sum = 0.0;
    double upper_sum = 0.0;
    std::size_t lower_count = 0;
    for (double x : sample.values()) {
        if (x <= t) {
            lower_sum += x;
            ++lower_count;
        } else {
            upper_sum += x;
        }
    }
    const std::size_t upper_count = sample.size() - lower_count;
    return lower_sum / static_cast<double>(lower_count) +
           upper_sum / static_cast<double>(upper_count) - 2.0 * t;
}

CrossoverCurve::CrossoverCurve(const Sample& sample) {
    if (sample.size() < 2) {
        throw std::invalid_argument("cross-over curve needs at least two observations");
    }
    if (!sample.nondegenerate()) {
        throw std::invalid_argument("cross-over curve needs at least two distinct values");
    }
    const auto sorted = sample.sorted();
    const std::size_t n = sorted.size();

    // Suffix sums are accumulated separately rather than as total - prefix so
    // the upper means do not suffer cancellation.
    std::vector<double> suffix(n + 1, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        suffix[i] = suffix[i + 1] + sorted[i];
    }

    double prefix = 0.0;
    std::size_t i = 0;
    while (i < n) {
        const double value = sorted[i];
        while (i < n && sorted[i] == value) {
            prefix += sorted[i];
            ++i;
        }
        breakpoints_.push_back(value);
        if (i < n) {
            const double lower_mean = prefix / static_cast<double>(i);
            const double upper_mean = suffix[i] / static_cast<double>(n - i);
            intercepts_.push_back(lower_mean + upper_mean);
        }
    }
}

std::size_t CrossoverCurve::segment_of(double t) const {
    if (!(t >= lower() && t < upper())) {
        throw std::domain_error("t outside the cross-over curve domain [X_(1), X_(n))");
    }
    const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
    return static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
}

double CrossoverCurve::operator()(double t) const {
    return intercepts_[segment_of(t)] - 2.0 * t;
}

double CrossoverCurve::left_limit(double t) const {
    if (!(t > lower() && t <= upper())) {
        throw std::domain_error("left limit needs t in (X_(1), X_(n)]");
    }
    const auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), t);
    const auto k = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
    return intercepts_[k] - 2.0 * t;
}

SplitEstimate sample_split_point(const CrossoverCurve& curve, std::size_t n) {
    const auto bp = curve.breakpoints();
    const auto ic = curve.intercepts();
    const std::size_t segments = curve.segment_count();

    bool positive_everywhere = true;
    for (std::size_t k = 0; k < segments; ++k) {
        // Infimum over a segment is its left limit at the right end.
        if (!(ic[k] - 2.0 * bp[k + 1] > 0.0)) {
            positive_everywhere = false;
            break;
        }
    }
    if (positive_everywhere) {
        return {SplitOutcome::PositiveInfinity, 0.0, n};
    }

    for (std::size_t k = segments; k-- > 0;) {
        const double zero = curve.segment_zero(k);
        // T_n(bp[k]) >= 0 iff the affine zero is not left of the segment.
        if (zero >= bp[k]) {
            return {SplitOutcome::Finite, std::min(zero, bp[k + 1]), n};
        }
    }
    return {SplitOutcome::NegativeInfinity, 0.0, n};
}

SplitEstimate sample_split_point(const Sample& sample) {
    return sample_split_point(CrossoverCurve(sample), sample.size());
}

double theoretical_crossover(const DistributionModel& model, double t) {
    const double below = model.cdf(t);
    const double above = model.survival(t);
    if (!(below > 0.0 && above > 0.0)) {
        throw std::domain_error("cross-over function requires 0 < F(t) < 1");
    }
    return model.lower_moment(t) / below + model.upper_moment(t) / above - 2.0 * t;
}

double theoretical_crossover_derivative(const DistributionModel& model, double t) {
    const double below = model.cdf(t);
    const double above = model.survival(t);
    if (!(below > 0.0 && above > 0.0)) {
        throw std::domain_error("cross-over derivative requires 0 < F(t) < 1");
    }
    const double density = model.pdf(t);
    const double lower = model.lower_moment(t);
    const double upper = model.upper_moment(t);
    return t * density / below - density * lower / (below * below) - t * density / above +
           density * upper / (above * above) - 2.0;
}

double split_function(const DistributionModel& model, double p) {
    require_open_unit(p, "split function");
    const double q = model.quantile(p);
    const double lower_mean = model.lower_moment(q) / p;
    const double upper_mean = model.upper_moment(q) / (1.0 - p);
    const double mean = model.mean();
    return p * lower_mean * lower_mean + (1.0 - p) * upper_mean * upper_mean - mean * mean;
}

double crossover_G(const DistributionModel& model, double p) {
    require_open_unit(p, "cross-over function G");
    const double q = model.quantile(p);
    return model.lower_moment(q) / p + model.upper_moment(q) / (1.0 - p) - 2.0 * q;
}

}  // namespace crossover
