#include <crossover/mixing.hpp>

#include <crossover/distribution.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace crossover {

std::uint64_t mix_seed(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t n, std::uint64_t index) noexcept {
    return mix_seed(mix_seed(mix_seed(master) ^ n) ^ index);
}

double NormalStream::uniform() noexcept {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double NormalStream::operator()() { return normal_quantile(uniform()); }

GeneratorKind parse_generator_kind(std::string_view name) {
    if (name == "iid_normal") return GeneratorKind::IidNormal;
    if (name == "m_dependent_moving_sum") return GeneratorKind::MovingSum;
    if (name == "ar1_gaussian") return GeneratorKind::Ar1Gaussian;
    throw std::invalid_argument("unknown generator kind '" + std::string(name) + "'");
}

std::string_view to_string(GeneratorKind kind) noexcept {
    switch (kind) {
        case GeneratorKind::IidNormal: return "iid_normal";
        case GeneratorKind::MovingSum: return "m_dependent_moving_sum";
        case GeneratorKind::Ar1Gaussian: return "ar1_gaussian";
    }
    return "unknown";
}

GeneratorSpec GeneratorSpec::two_dependent(std::size_t n, std::uint64_t seed) {
    GeneratorSpec spec;
    spec.kind = GeneratorKind::MovingSum;
    spec.terms = 3;
    spec.innovation_variance = 1.0 / 3.0;
    spec.n = n;
    spec.seed = seed;
    return spec;
}

GeneratorSpec GeneratorSpec::iid(std::size_t n, std::uint64_t seed) {
    GeneratorSpec spec;
    spec.kind = GeneratorKind::IidNormal;
    spec.n = n;
    spec.seed = seed;
    return spec;
}

GeneratorSpec GeneratorSpec::ar1(double rho, std::size_t n, std::uint64_t seed) {
    GeneratorSpec spec;
    spec.kind = GeneratorKind::Ar1Gaussian;
    spec.rho = rho;
    spec.n = n;
    spec.seed = seed;
    return spec;
}

void GeneratorSpec::validate() const {
    if (n < 2) {
        throw std::invalid_argument("generator length must be at least 2");
    }
    switch (kind) {
        case GeneratorKind::IidNormal:
            break;
        case GeneratorKind::MovingSum:
            if (terms == 0) {
                throw std::invalid_argument("moving sum needs at least one term");
            }
            if (!(innovation_variance > 0.0) || !std::isfinite(innovation_variance)) {
                throw std::invalid_argument("innovation variance must be positive");
            }
            break;
        case GeneratorKind::Ar1Gaussian:
            if (!(rho > -1.0 && rho < 1.0)) {
                throw std::invalid_argument("AR(1) coefficient must lie in (-1, 1)");
            }
            break;
    }
}

std::vector<double> generate_values(const GeneratorSpec& spec) {
    spec.validate();
    NormalStream normal(spec.seed);
    std::vector<double> out(spec.n);

    switch (spec.kind) {
        case GeneratorKind::IidNormal:
            for (auto& x : out) x = normal();
            break;

        case GeneratorKind::MovingSum: {
            const double scale = std::sqrt(spec.innovation_variance);
            std::vector<double> innovations(spec.n + spec.terms - 1);
            for (auto& y : innovations) y = scale * normal();
            // Sliding window sum, recomputed from scratch per window so that
            // rounding does not drift along long series.
            for (std::size_t k = 0; k < spec.n; ++k) {
                double sum = 0.0;
                for (std::size_t j = 0; j < spec.terms; ++j) sum += innovations[k + j];
                out[k] = sum;
            }
            break;
        }

        case GeneratorKind::Ar1Gaussian: {
            // Stationary start X_1 ~ N(0, 1); innovations scaled to keep unit variance.
            const double innovation_sd = std::sqrt(1.0 - spec.rho * spec.rho);
            out[0] = normal();
            for (std::size_t k = 1; k < spec.n; ++k) {
                out[k] = spec.rho * out[k - 1] + innovation_sd * normal();
            }
            break;
        }
    }
    return out;
}

Sample generate(const GeneratorSpec& spec) { return Sample(generate_values(spec)); }

}  // namespace crossover
