#pragma once

// Reference computations kept deliberately naive and separate from the
// library: plain loops, std::pow, no shared helpers.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

inline double discount_sum(const std::vector<double>& flows, double r) {
    double total = 0.0;
    for (std::size_t i = 0; i < flows.size(); ++i) total += flows[i] / std::pow(1.0 + r, static_cast<double>(i + 1));
    return total;
}

// Kahan-summed explicit perpetuity: sum_{k=1..n} flow (1+g)^k / (1+r)^k.
inline double truncated_perpetuity(double flow, double g, double r, long n) {
    const double q = (1.0 + g) / (1.0 + r);
    double sum = 0.0, c = 0.0, term = flow;
    for (long k = 1; k <= n; ++k) {
        term *= q;
        const double y = term - c;
        const double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    return sum;
}

// FCF valuation written out from the definitions.
inline double fcf_value(const std::vector<double>& oi, const std::vector<double>& noa, double r, double g) {
    const std::size_t T = oi.size() - 1;
    std::vector<double> fcf;
    for (std::size_t t = 1; t <= T; ++t) fcf.push_back(oi[t] - (noa[t] - noa[t - 1]));
    const double cv = fcf.back() * (1.0 + g) / (r - g);
    return discount_sum(fcf, r) + cv / std::pow(1.0 + r, static_cast<double>(T));
}

inline double roi_value(const std::vector<double>& oi, const std::vector<double>& noa, double r, double g) {
    const std::size_t T = oi.size() - 1;
    std::vector<double> roi;
    for (std::size_t t = 1; t <= T; ++t) roi.push_back(oi[t] - r * noa[t - 1]);
    const double cv = roi.back() * (1.0 + g) / (r - g);
    return noa[0] + discount_sum(roi, r) + cv / std::pow(1.0 + r, static_cast<double>(T));
}

inline double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const auto n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

inline double harmonic(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += 1.0 / x;
    return static_cast<double>(v.size()) / s;
}

inline double chi_square(const std::vector<long>& counts) {
    long n = 0;
    for (long c : counts) n += c;
    double chi = 0.0;
    for (int d = 1; d <= 9; ++d) {
        const double e = std::log10(1.0 + 1.0 / d);
        const double o = static_cast<double>(counts[d - 1]) / static_cast<double>(n);
        chi += (o - e) * (o - e) / e;
    }
    return static_cast<double>(n) * chi;
}

struct Rng {
    std::mt19937_64 engine;
    explicit Rng(std::uint64_t seed) : engine(seed) {}
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine); }
};

inline bool close_rel(double a, double b, double rel) {
    return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

}  // namespace oracle
