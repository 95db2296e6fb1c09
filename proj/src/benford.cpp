#include "accval/benford.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "accval/errors.hpp"

namespace accval {

std::optional<int> leading_digit(double x) {
    if (!std::isfinite(x) || x == 0.0) return std::nullopt;
    // Shortest round-trip form, i.e. the digits the figure was written with:
    // 1e23 is held as 9.99...e22 but counts as a 1.
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, std::abs(x), std::chars_format::scientific);
    if (res.ec != std::errc{}) return std::nullopt;
    return buf[0] - '0';
}

double benford_pmf(int digit) {
    if (digit < 1 || digit > 9) throw DomainError("Benford digit must be in 1..9, got " + std::to_string(digit));
    return std::log10(1.0 + 1.0 / digit);
}

void DigitHistogram::add(int digit) {
    counts[static_cast<std::size_t>(digit - 1)] += 1;
    total += 1;
}

DigitHistogram digit_histogram(std::span<const double> values) {
    DigitHistogram h;
    for (const double v : values) {
        if (const auto d = leading_digit(v)) h.add(*d);
    }
    return h;
}

std::string_view verdict_name(BenfordVerdict v) {
    switch (v) {
        case BenfordVerdict::conforming: return "conforming";
        case BenfordVerdict::nonconforming: return "nonconforming";
        case BenfordVerdict::insufficient_sample: return "insufficient-sample";
    }
    return "?";
}

BenfordReport benford_screen(std::span<const double> values, const BenfordThresholds& thresholds) {
    BenfordReport r;
    r.histogram = digit_histogram(values);
    const auto n = static_cast<double>(r.histogram.total);
    for (int d = 1; d <= 9; ++d) {
        const auto i = static_cast<std::size_t>(d - 1);
        r.expected[i] = benford_pmf(d);
        r.observed[i] = n > 0 ? static_cast<double>(r.histogram.counts[i]) / n : 0.0;
    }
    if (n > 0) {
        double chi = 0.0;
        double mad = 0.0;
        for (std::size_t i = 0; i < 9; ++i) {
            const double diff = r.observed[i] - r.expected[i];
            chi += diff * diff / r.expected[i];
            mad += std::abs(diff);
        }
        r.chi_square = n * chi;
        r.mad = mad / 9.0;
    }
    if (r.histogram.total < thresholds.min_sample) {
        r.verdict = BenfordVerdict::insufficient_sample;
    } else if (r.chi_square > thresholds.chi_square_critical || r.mad > thresholds.mad_limit) {
        r.verdict = BenfordVerdict::nonconforming;
    } else {
        r.verdict = BenfordVerdict::conforming;
    }
    return r;
}

}  // namespace accval
