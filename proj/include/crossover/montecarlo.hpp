#pragma once

#include <crossover/mixing.hpp>

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

namespace crossover {

/// Runs fn(i) for i in [0, count) on up to `workers` threads (0 = hardware
/// concurrency). Callers write results by index, so the outcome does not
/// depend on scheduling. The first exception thrown by any task is rethrown.
template <typename Fn>
void parallel_for_replicates(std::size_t count, unsigned workers, Fn&& fn) {
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) {
                    try {
                        fn(i);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                        next = count;
                    }
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
}

struct ExperimentConfig {
    GeneratorSpec generator;  // seed and n are overridden per replicate
    std::vector<std::size_t> sample_sizes;
    std::size_t replicates = 1000;
    std::uint64_t master_seed = 0;
    unsigned workers = 0;

    /// Two-dependent moving sum, sizes {100, 300, 1000, 5000}, 1000 replicates.
    static ExperimentConfig table1(std::uint64_t master_seed);

    /// Throws std::invalid_argument for replicates < 2, no sizes, or any n < 2.
    void validate() const;
};

struct SizeSummary {
    std::size_t n = 0;
    std::size_t replicates = 0;
    std::size_t replicates_used = 0;
    std::size_t sentinels = 0;  // +-infinity split points, excluded from the moments
    double mean = 0.0;          // mean of sqrt(n) t_n
    double variance = 0.0;      // sample variance (n - 1 divisor) of sqrt(n) t_n
};

struct ExperimentReport {
    std::vector<SizeSummary> rows;
};

/// sqrt(n) t_n for each replicate (nullopt for sentinel outcomes). Replicate i
/// uses seed derive_seed(master_seed, n, i).
std::vector<std::optional<double>> simulate_scaled_split_points(const GeneratorSpec& generator,
                                                                std::size_t n,
                                                                std::size_t replicates,
                                                                std::uint64_t master_seed,
                                                                unsigned workers = 0);

SizeSummary summarize(std::size_t n, std::span<const std::optional<double>> scaled);

ExperimentReport run_experiment(const ExperimentConfig& config);

/// Columns: n,replicates_used,sentinels,mean_sqrt_n_tn,var_sqrt_n_tn
std::string to_csv(const ExperimentReport& report);

/// Report plus the generating config.
std::string to_json(const ExperimentReport& report, const ExperimentConfig& config);

/// Kolmogorov-Smirnov distance between the empirical cdf of the values and the
/// standard normal cdf. Throws std::invalid_argument for fewer than 100 values.
double normality_diagnostic(std::span<const double> standardized_values);

}  // namespace crossover
