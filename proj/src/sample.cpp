#include <crossover/sample.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace crossover {

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw std::invalid_argument("sample must contain at least one value");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw std::invalid_argument("sample value at index " + std::to_string(i) +
                                        " is not finite");
        }
    }
    sorted_ = values_;
    std::sort(sorted_.begin(), sorted_.end());
}

Sample Sample::affine(double scale, double shift) const {
    std::vector<double> mapped(values_.size());
    std::transform(values_.begin(), values_.end(), mapped.begin(),
                   [=](double x) { return scale * x + shift; });
    return Sample(std::move(mapped));
}

std::size_t EmpiricalCdf::count_at_or_below(double t) const noexcept {
    const auto sorted = sample_->sorted();
    return static_cast<std::size_t>(std::upper_bound(sorted.begin(), sorted.end(), t) -
                                    sorted.begin());
}

double EmpiricalCdf::operator()(double t) const noexcept {
    return static_cast<double>(count_at_or_below(t)) /
           static_cast<double>(sample_->size());
}

}  // namespace crossover
