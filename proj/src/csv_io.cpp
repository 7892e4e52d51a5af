#include <crossover/csv_io.hpp>

#include <fmt/format.h>

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string_view>

namespace crossover {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::optional<double> parse_number(std::string_view field) {
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        return std::nullopt;
    }
    return value;
}

}  // namespace

std::vector<double> parse_values_csv(std::istream& in) {
    std::vector<double> values;
    std::string line;
    std::size_t line_number = 0;
    bool seen_content = false;
    while (std::getline(in, line)) {
        ++line_number;
        const auto field = trim(line);
        if (field.empty()) continue;
        const auto value = parse_number(field);
        if (!value) {
            if (!seen_content) {
                seen_content = true;  // header
                continue;
            }
            throw InputError(fmt::format("line {}: '{}' is not a number", line_number, field));
        }
        if (!std::isfinite(*value)) {
            throw InputError(fmt::format("line {}: value is not finite", line_number));
        }
        seen_content = true;
        values.push_back(*value);
    }
    return values;
}

Sample read_sample_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError(fmt::format("cannot open '{}'", path.string()));
    }
    auto values = parse_values_csv(in);
    if (values.empty()) {
        throw InputError(fmt::format("'{}' contains no values", path.string()));
    }
    return Sample(std::move(values));
}

void write_values_csv(std::ostream& out, std::span<const double> values) {
    for (double v : values) out << format_number(v) << '\n';
}

std::string format_number(double value) { return fmt::format("{:.12g}", value); }

}  // namespace crossover
