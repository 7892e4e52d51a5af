#pragma once

#include <crossover/sample.hpp>

#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace crossover {

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One real per line, locale independent. A non-numeric first line is taken as
/// a header; blank lines are skipped. Throws InputError on anything else.
std::vector<double> parse_values_csv(std::istream& in);
Sample read_sample_csv(const std::filesystem::path& path);

void write_values_csv(std::ostream& out, std::span<const double> values);

/// 12 significant digits, the format used for every numeric output.
std::string format_number(double value);

}  // namespace crossover
