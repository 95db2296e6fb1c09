#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Small text helpers shared by the file readers and the report renderer.
namespace accval::text {

std::string_view trim(std::string_view s);
std::vector<std::string_view> split(std::string_view s, char sep);

/// Splits into lines, dropping a UTF-8 BOM and trailing '\r'.
std::vector<std::string_view> lines(std::string_view s);

/// Whole-field decimal parse; nullopt on trailing garbage or non-finite values.
std::optional<double> parse_double(std::string_view s);
std::optional<int> parse_int(std::string_view s);

/// Shortest representation that round-trips to the same double.
std::string shortest(double value);

/// Half-up (away from zero) decimal rounding of the value the double denotes.
double round_half_up(double value, int decimals);

/// Fixed-point string after half-up rounding, e.g. fixed(6288.4, 2) == "6288.40".
std::string fixed(double value, int decimals);

}  // namespace accval::text
