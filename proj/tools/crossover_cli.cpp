// Command-line front end: split point estimation, curve export, simulation,
// the replicated sqrt(n) t_n experiment and long-run variance estimates.
//
// Exit codes: 0 success, 1 input or usage error, 2 split point is +-infinity.

#include <crossover/crossover.hpp>
#include <crossover/csv_io.hpp>
#include <crossover/distribution.hpp>
#include <crossover/mixing.hpp>
#include <crossover/montecarlo.hpp>
#include <crossover/variance.hpp>

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace {

using namespace crossover;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitSentinel = 2;

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw InputError(fmt::format("cannot write '{}'", output_path));
    out << text;
}

std::string sentinel_message(const SplitEstimate& split) {
    return split.outcome == SplitOutcome::NegativeInfinity
               ? "split point is -inf: T_n < 0 on the whole domain"
               : "split point is +inf: T_n > 0 on the whole domain";
}

struct SplitOptions {
    std::string input;
    std::string output;
    std::optional<double> confidence;
    std::optional<std::size_t> bandwidth;
};

int run_split(const SplitOptions& opt) {
    const auto sample = read_sample_csv(opt.input);
    const auto split = sample_split_point(sample);
    if (!split.finite()) {
        std::cerr << sentinel_message(split) << '\n';
        return kExitSentinel;
    }
    std::string text = format_number(split.value) + "\n";
    if (opt.confidence) {
        const auto est = estimate_split_variance(sample, opt.bandwidth);
        const auto [lo, hi] = est.confidence_interval(*opt.confidence);
        text += fmt::format("bandwidth {}\n", est.bandwidth);
        text += "sigma_hat " + format_number(est.sigma) + "\n";
        text += "slope_hat " + format_number(est.slope) + "\n";
        text += "asymptotic_variance " + format_number(est.variance) + "\n";
        text += "ci_lower " + format_number(lo) + "\n";
        text += "ci_upper " + format_number(hi) + "\n";
    }
    emit(text, opt.output);
    return kExitOk;
}

struct CurveOptions {
    std::string input;
    std::string output;
    std::size_t grid = 512;
};

// Rows at every breakpoint (right value and left limit), a uniform grid over
// [X_(1), X_(n)] whose last point is the left limit at X_(n), and the split point.
std::string curve_csv(const Sample& sample, std::size_t grid) {
    const CrossoverCurve curve(sample);
    const auto bp = curve.breakpoints();
    // (t, order, value, kind); order puts left limits before right values at equal t.
    std::vector<std::tuple<double, int, double, std::string>> rows;
    for (std::size_t k = 0; k < bp.size(); ++k) {
        if (k > 0) rows.emplace_back(bp[k], 0, curve.left_limit(bp[k]), "left_limit");
        if (k + 1 < bp.size()) rows.emplace_back(bp[k], 1, curve(bp[k]), "breakpoint");
    }
    if (grid >= 2) {
        const double lo = curve.lower();
        const double hi = curve.upper();
        for (std::size_t j = 0; j < grid; ++j) {
            const double t = j + 1 == grid
                                 ? hi
                                 : lo + (hi - lo) * static_cast<double>(j) /
                                            static_cast<double>(grid - 1);
            if (t < hi) {
                rows.emplace_back(t, 1, curve(t), "grid");
            } else {
                rows.emplace_back(t, 0, curve.left_limit(t), "grid_left_limit");
            }
        }
    }
    const auto split = sample_split_point(curve, sample.size());
    if (split.finite()) rows.emplace_back(split.value, 2, curve(split.value), "zero");

    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
    });
    std::string out = "t,T_n,kind\n";
    for (const auto& [t, order, value, kind] : rows) {
        out += format_number(t) + "," + format_number(value) + "," + kind + "\n";
    }
    return out;
}

int run_curve(const CurveOptions& opt) {
    const auto sample = read_sample_csv(opt.input);
    emit(curve_csv(sample, opt.grid), opt.output);
    return kExitOk;
}

struct SimulateOptions {
    std::string kind = "m_dependent_moving_sum";
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::size_t terms = 3;
    double innovation_variance = 1.0 / 3.0;
    double rho = 0.0;
    std::string output;
};

int run_simulate(const SimulateOptions& opt) {
    GeneratorSpec spec;
    spec.kind = parse_generator_kind(opt.kind);
    spec.n = opt.n;
    spec.seed = opt.seed;
    spec.terms = opt.terms;
    spec.innovation_variance = opt.innovation_variance;
    spec.rho = opt.rho;
    std::ostringstream text;
    write_values_csv(text, generate_values(spec));
    emit(text.str(), opt.output);
    return kExitOk;
}

struct Table1Options {
    std::vector<std::size_t> sizes{100, 300, 1000, 5000};
    std::size_t replicates = 1000;
    std::uint64_t seed = 0;
    unsigned workers = 0;
    std::string output;
    std::string json;
};

int run_table1(const Table1Options& opt) {
    auto config = ExperimentConfig::table1(opt.seed);
    config.sample_sizes = opt.sizes;
    config.replicates = opt.replicates;
    config.workers = opt.workers;
    const auto report = run_experiment(config);

    if (!opt.output.empty()) emit(to_csv(report), opt.output);
    if (!opt.json.empty()) emit(to_json(report, config), opt.json);

    std::cout << fmt::format("{:>8} {:>10} {:>10} {:>18} {:>18}\n", "n", "used", "sentinels",
                             "mean sqrt(n) t_n", "var sqrt(n) t_n");
    for (const auto& row : report.rows) {
        std::cout << fmt::format("{:>8} {:>10} {:>10} {:>18} {:>18}\n", row.n, row.replicates_used,
                                 row.sentinels, format_number(row.mean),
                                 format_number(row.variance));
    }
    return kExitOk;
}

struct VarianceOptions {
    std::string input;
    std::optional<double> t;
    std::optional<std::size_t> bandwidth;
    bool analytic = false;
    std::vector<double> lags{2.0 / 3.0, 1.0 / 3.0};
    std::string output;
};

int run_variance(const VarianceOptions& opt) {
    std::string text;
    if (opt.analytic) {
        const StandardNormal model;
        const double t = opt.t.value_or(0.0);
        const double sigma = analytic_sigma_mdependent(model, t, opt.lags);
        const double slope = theoretical_crossover_derivative(model, t);
        text += "t " + format_number(t) + "\n";
        text += "sigma " + format_number(sigma) + "\n";
        text += "slope " + format_number(slope) + "\n";
        if (slope < 0.0) {
            text += "asymptotic_variance " + format_number(split_point_variance(sigma, slope)) + "\n";
        }
        emit(text, opt.output);
        return kExitOk;
    }
    if (opt.input.empty()) throw InputError("variance needs --input or --analytic");

    const auto sample = read_sample_csv(opt.input);
    double t = 0.0;
    if (opt.t) {
        t = *opt.t;
    } else {
        const auto split = sample_split_point(sample);
        if (!split.finite()) {
            std::cerr << sentinel_message(split) << '\n';
            return kExitSentinel;
        }
        t = split.value;
    }
    const std::size_t bandwidth = opt.bandwidth.value_or(default_bandwidth(sample.size()));
    const auto series = influence_values(sample, t);
    text += "t " + format_number(t) + "\n";
    text += "cdf " + format_number(series.cdf_at_t) + "\n";
    text += "mu_lower " + format_number(series.mu_lower) + "\n";
    text += "mu_upper " + format_number(series.mu_upper) + "\n";
    text += fmt::format("bandwidth {}\n", bandwidth);
    text += "sigma_hat " + format_number(bartlett_long_run_variance(series.values, bandwidth)) + "\n";
    emit(text, opt.output);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-cluster split point estimation with the cross-over function"};
    app.require_subcommand(1);

    SplitOptions split_opt;
    auto* split = app.add_subcommand("split", "Estimate the sample split point of a CSV sample");
    split->add_option("--input,-i", split_opt.input, "CSV file, one value per line")->required();
    split->add_option("--output,-o", split_opt.output, "Write the report here instead of stdout");
    split->add_option("--confidence", split_opt.confidence, "Confidence level of the interval")
        ->check(CLI::Range(0.0, 1.0));
    split->add_option("--bandwidth", split_opt.bandwidth, "Bartlett bandwidth (default 1.5 n^(1/3))");

    CurveOptions curve_opt;
    auto* curve = app.add_subcommand("curve", "Export T_n for plotting");
    curve->add_option("--input,-i", curve_opt.input, "CSV file, one value per line")->required();
    curve->add_option("--output,-o", curve_opt.output, "Output CSV path");
    curve->add_option("--grid", curve_opt.grid, "Uniform grid points")->capture_default_str();

    SimulateOptions sim_opt;
    auto* simulate = app.add_subcommand("simulate", "Generate a stationary Gaussian series");
    simulate->add_option("--kind", sim_opt.kind, "iid_normal | m_dependent_moving_sum | ar1_gaussian")
        ->capture_default_str();
    simulate->add_option("--n", sim_opt.n, "Series length")->required();
    simulate->add_option("--seed", sim_opt.seed, "RNG seed")->required();
    simulate->add_option("--terms", sim_opt.terms, "Moving-sum window")->capture_default_str();
    simulate->add_option("--innovation-variance", sim_opt.innovation_variance,
                         "Moving-sum innovation variance");
    simulate->add_option("--rho", sim_opt.rho, "AR(1) coefficient");
    simulate->add_option("--output,-o", sim_opt.output, "Output CSV path");

    Table1Options table_opt;
    auto* table1 = app.add_subcommand("table1", "Replicated mean and variance of sqrt(n) t_n");
    table1->add_option("--sizes", table_opt.sizes, "Sample sizes")->delimiter(',')->capture_default_str();
    table1->add_option("--replicates", table_opt.replicates, "Replicates per size")
        ->capture_default_str();
    table1->add_option("--seed,--master-seed", table_opt.seed, "Master seed")->required();
    table1->add_option("--workers", table_opt.workers, "Worker threads (0 = all cores)");
    table1->add_option("--output,-o", table_opt.output, "Report CSV path");
    table1->add_option("--json", table_opt.json, "Report JSON path");

    VarianceOptions var_opt;
    auto* variance = app.add_subcommand("variance", "Long-run variance of the influence series");
    variance->add_option("--input,-i", var_opt.input, "CSV file, one value per line");
    variance->add_option("--t", var_opt.t, "Evaluation point (default: the sample split point)");
    variance->add_option("--bandwidth", var_opt.bandwidth, "Bartlett bandwidth");
    variance->add_flag("--analytic", var_opt.analytic,
                       "Quadrature value for a standard normal Gaussian sequence");
    variance->add_option("--lags", var_opt.lags, "Lag correlations for --analytic")->delimiter(',');
    variance->add_option("--output,-o", var_opt.output, "Output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (split->parsed()) return run_split(split_opt);
        if (curve->parsed()) return run_curve(curve_opt);
        if (simulate->parsed()) return run_simulate(sim_opt);
        if (table1->parsed()) return run_table1(table_opt);
        if (variance->parsed()) return run_variance(var_opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
