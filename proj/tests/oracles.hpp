#pragma once

// Test-only reference computations. Nothing here calls into the library's
// quadrature or prefix-sum paths.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

namespace oracle {

/// Composite Simpson rule with `panels` (even) subintervals.
template <typename F>
double simpson(F&& f, double a, double b, std::size_t panels = 20000) {
    if (panels % 2 != 0) ++panels;
    const double h = (b - a) / static_cast<double>(panels);
    double sum = f(a) + f(b);
    for (std::size_t i = 1; i < panels; ++i) {
        sum += (i % 2 == 1 ? 4.0 : 2.0) * f(a + h * static_cast<double>(i));
    }
    return sum * h / 3.0;
}

inline double phi(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi); }
inline double Phi(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

/// int_{-inf}^t x phi(x) dx truncated at -12.
inline double lower_moment(double t) {
    return simpson([](double x) { return x * phi(x); }, -12.0, t);
}
inline double upper_moment(double t) {
    return simpson([](double x) { return x * phi(x); }, t, 12.0);
}

/// E xi_0(X)^2 for X ~ N(0, 1), xi built from quadrature truncated means.
inline double influence_second_moment(double t) {
    const double F = Phi(t);
    const double mu_l = lower_moment(t) / F;
    const double mu_u = upper_moment(t) / (1.0 - F);
    const double below = simpson([&](double x) { return (x - mu_l) * (x - mu_l) * phi(x); }, -12.0, t);
    const double above = simpson([&](double x) { return (x - mu_u) * (x - mu_u) * phi(x); }, t, 12.0);
    return below / (F * F) + above / ((1.0 - F) * (1.0 - F));
}

/// Direct evaluation of T_n from raw values, no sorting.
inline double sample_crossover(const std::vector<double>& xs, double t) {
    double lo = 0.0, hi = 0.0;
    std::size_t nlo = 0, nhi = 0;
    for (double x : xs) {
        if (x <= t) { lo += x; ++nlo; } else { hi += x; ++nhi; }
    }
    return lo / static_cast<double>(nlo) + hi / static_cast<double>(nhi) - 2.0 * t;
}

}  // namespace oracle
