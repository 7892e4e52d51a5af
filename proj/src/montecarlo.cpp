#include <crossover/montecarlo.hpp>

#include <crossover/crossover.hpp>
#include <crossover/csv_io.hpp>
#include <crossover/distribution.hpp>

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace crossover {

ExperimentConfig ExperimentConfig::table1(std::uint64_t master_seed) {
    ExperimentConfig config;
    config.generator = GeneratorSpec::two_dependent(2, 0);
    config.sample_sizes = {100, 300, 1000, 5000};
    config.replicates = 1000;
    config.master_seed = master_seed;
    return config;
}

void ExperimentConfig::validate() const {
    if (replicates < 2) {
        throw std::invalid_argument("an experiment needs at least two replicates");
    }
    if (sample_sizes.empty()) {
        throw std::invalid_argument("an experiment needs at least one sample size");
    }
    for (std::size_t n : sample_sizes) {
        if (n < 2) throw std::invalid_argument("every sample size must be at least 2");
    }
}

std::vector<std::optional<double>> simulate_scaled_split_points(const GeneratorSpec& generator,
                                                                std::size_t n,
                                                                std::size_t replicates,
                                                                std::uint64_t master_seed,
                                                                unsigned workers) {
    GeneratorSpec checked = generator;
    checked.n = n;
    checked.validate();

    const double root_n = std::sqrt(static_cast<double>(n));
    std::vector<std::optional<double>> out(replicates);
    parallel_for_replicates(replicates, workers, [&](std::size_t i) {
        GeneratorSpec spec = checked;
        spec.seed = derive_seed(master_seed, n, i);
        const auto split = sample_split_point(generate(spec));
        if (split.finite()) out[i] = root_n * split.value;
    });
    return out;
}

SizeSummary summarize(std::size_t n, std::span<const std::optional<double>> scaled) {
    SizeSummary row;
    row.n = n;
    row.replicates = scaled.size();
    double sum = 0.0;
    for (const auto& v : scaled) {
        if (v) {
            sum += *v;
            ++row.replicates_used;
        } else {
            ++row.sentinels;
        }
    }
    if (row.replicates_used == 0) return row;
    row.mean = sum / static_cast<double>(row.replicates_used);
    if (row.replicates_used < 2) return row;
    double ss = 0.0;
    for (const auto& v : scaled) {
        if (v) ss += (*v - row.mean) * (*v - row.mean);
    }
    row.variance = ss / static_cast<double>(row.replicates_used - 1);
    return row;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
    config.validate();
    ExperimentReport report;
    for (std::size_t n : config.sample_sizes) {
        const auto scaled = simulate_scaled_split_points(config.generator, n, config.replicates,
                                                         config.master_seed, config.workers);
        report.rows.push_back(summarize(n, scaled));
    }
    return report;
}

std::string to_csv(const ExperimentReport& report) {
    std::string out = "n,replicates_used,sentinels,mean_sqrt_n_tn,var_sqrt_n_tn\n";
    for (const auto& row : report.rows) {
        out += fmt::format("{},{},{},{},{}\n", row.n, row.replicates_used, row.sentinels,
                           format_number(row.mean), format_number(row.variance));
    }
    return out;
}

std::string to_json(const ExperimentReport& report, const ExperimentConfig& config) {
    nlohmann::json j;
    j["config"] = {
        {"generator",
         {{"kind", std::string(to_string(config.generator.kind))},
          {"terms", config.generator.terms},
          {"innovation_variance", config.generator.innovation_variance},
          {"rho", config.generator.rho}}},
        {"sample_sizes", config.sample_sizes},
        {"replicates", config.replicates},
        {"master_seed", config.master_seed},
    };
    j["rows"] = nlohmann::json::array();
    for (const auto& row : report.rows) {
        j["rows"].push_back({{"n", row.n},
                             {"replicates_used", row.replicates_used},
                             {"sentinels", row.sentinels},
                             {"mean_sqrt_n_tn", row.mean},
                             {"var_sqrt_n_tn", row.variance}});
    }
    return j.dump(2) + "\n";
}

double normality_diagnostic(std::span<const double> standardized_values) {
    if (standardized_values.size() < 100) {
        throw std::invalid_argument("normality diagnostic needs at least 100 values");
    }
    std::vector<double> sorted(standardized_values.begin(), standardized_values.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double distance = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double cdf = normal_cdf(sorted[i]);
        const double above = static_cast<double>(i + 1) / n - cdf;
        const double below = cdf - static_cast<double>(i) / n;
        distance = std::max({distance, above, below});
    }
    return distance;
}

}  // namespace crossover
