#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>

namespace accval {

/// First significant decimal digit of |x|; nullopt for zero and non-finite values.
std::optional<int> leading_digit(double x);

/// log10(1 + 1/d) for d in 1..9.
double benford_pmf(int digit);

struct DigitHistogram {
    std::array<long, 9> counts{};  // counts[d - 1]
    long total = 0;

    void add(int digit);
};

DigitHistogram digit_histogram(std::span<const double> values);

enum class BenfordVerdict { conforming, nonconforming, insufficient_sample };

std::string_view verdict_name(BenfordVerdict v);

struct BenfordThresholds {
    long min_sample = 50;
    double chi_square_critical = 15.507;  // 5% level, 8 degrees of freedom
    double mad_limit = 0.015;             // upper bound of marginal conformity
};

struct BenfordReport {
    DigitHistogram histogram;
    std::array<double, 9> observed{};
    std::array<double, 9> expected{};
    double chi_square = 0.0;
    double mad = 0.0;
    BenfordVerdict verdict = BenfordVerdict::insufficient_sample;
};

BenfordReport benford_screen(std::span<const double> values, const BenfordThresholds& thresholds = {});

}  // namespace accval
