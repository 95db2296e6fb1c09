#include "accval/text.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace accval::text {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

std::vector<std::string_view> lines(std::string_view s) {
    if (s.starts_with("\xEF\xBB\xBF")) s.remove_prefix(3);
    std::vector<std::string_view> out;
    if (s.empty()) return out;
    for (auto line : split(s, '\n')) {
        if (line.ends_with('\r')) line.remove_suffix(1);
        out.push_back(line);
    }
    if (!out.empty() && out.back().empty()) out.pop_back();
    return out;
}

std::optional<double> parse_double(std::string_view s) {
    s = trim(s);
    if (s.starts_with('+')) s.remove_prefix(1);
    if (s.empty()) return std::nullopt;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(value)) {
        return std::nullopt;
    }
    return value;
}

std::optional<int> parse_int(std::string_view s) {
    s = trim(s);
    if (s.empty()) return std::nullopt;
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

std::string shortest(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

double round_half_up(double value, int decimals) {
    if (!std::isfinite(value)) return value;
    const double scale = std::pow(10.0, decimals);
    const double scaled = value * scale;
    // Binary doubles sit a hair below decimal ties (7860.645 -> 7860.6449999...);
    // a relative nudge of a few ulps restores the decimal tie before rounding.
    const double nudge = std::abs(scaled) * 1e-12;
    return std::round(scaled + std::copysign(nudge, scaled)) / scale;
}

std::string fixed(double value, int decimals) {
    if (!std::isfinite(value)) return "n/a";
    double rounded = round_half_up(value, decimals);
    if (rounded == 0.0) rounded = 0.0;  // no "-0.00"
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, rounded);
    return buf;
}

}  // namespace accval::text
