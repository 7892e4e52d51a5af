#pragma once

#include <crossover/sample.hpp>

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace crossover {

/// SplitMix64 finaliser; used to derive independent stream seeds.
std::uint64_t mix_seed(std::uint64_t x) noexcept;

/// Seed for replicate `index` of an experiment at sample size `n`.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t n, std::uint64_t index) noexcept;

/// Deterministic N(0, 1) stream: 64-bit Mersenne twister, inverse-cdf transform.
class NormalStream {
public:
    explicit NormalStream(std::uint64_t seed) : engine_(mix_seed(seed)) {}

    /// Uniform on the open interval (0, 1) with 53 random bits.
    double uniform() noexcept;
    double operator()();

private:
    std::mt19937_64 engine_;
};

enum class GeneratorKind { IidNormal, MovingSum, Ar1Gaussian };

GeneratorKind parse_generator_kind(std::string_view name);
std::string_view to_string(GeneratorKind kind) noexcept;

struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::MovingSum;
    std::size_t terms = 3;                    // moving sum: number of innovations per window
    double innovation_variance = 1.0 / 3.0;  // moving sum: Var(Y)
    double rho = 0.0;                         // AR(1) coefficient
    std::uint64_t seed = 0;
    std::size_t n = 0;

    /// X_k = Y_{k-2} + Y_{k-1} + Y_k with Y ~ N(0, 1/3): 2-dependent, N(0, 1) marginals.
    static GeneratorSpec two_dependent(std::size_t n, std::uint64_t seed);
    static GeneratorSpec iid(std::size_t n, std::uint64_t seed);
    static GeneratorSpec ar1(double rho, std::size_t n, std::uint64_t seed);

    /// Throws std::invalid_argument for n < 2, terms == 0, nonpositive
    /// innovation variance or |rho| >= 1.
    void validate() const;
};

std::vector<double> generate_values(const GeneratorSpec& spec);
Sample generate(const GeneratorSpec& spec);

}  // namespace crossover
