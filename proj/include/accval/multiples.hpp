#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace accval {

enum class CentralTendency { median, harmonic_mean, mean };
enum class Driver { ebit, sales, book_value, earnings };

std::string_view tendency_name(CentralTendency m);
std::optional<CentralTendency> parse_tendency(std::string_view name);
std::string_view driver_name(Driver d);
std::optional<Driver> parse_driver(std::string_view name);

/// A peer firm. Its multiple for a driver is entity_value / driver when the
/// entity value is known, otherwise the multiple given for that driver.
struct Comparable {
    std::string name;
    std::optional<double> entity_value;
    std::map<Driver, double> drivers;
    std::map<Driver, double> given_multiples;

    double multiple(Driver d) const;
};

/// Median (mean of middle pair for even counts), harmonic mean n / sum(1/x)
/// or arithmetic mean. Values are sorted first so the result does not depend
/// on input order.
double central_multiple(std::span<const double> values, CentralTendency method);

double value_by_multiple(double multiple, double driver);

struct CompsRequest {
    std::map<Driver, double> target;
    double net_financial_liabilities = 0.0;
    double noncontrolling_interest = 0.0;
    double shares = 0.0;
    std::vector<Driver> drivers;
    std::vector<CentralTendency> methods;
    /// Multiples applied verbatim instead of the computed central value.
    std::map<std::pair<Driver, CentralTendency>, double> supplied;
};

struct CompsRow {
    Driver driver = Driver::ebit;
    CentralTendency method = CentralTendency::median;
    double computed_multiple = 0.0;
    std::optional<double> supplied_multiple;
    double applied_multiple = 0.0;
    double entity_value = 0.0;
    double equity_value = 0.0;
    double per_share = 0.0;

    /// Supplied multiple differs from the recomputed one at 2-dp print precision.
    bool deviates() const;
};

struct CompsResult {
    std::vector<CompsRow> rows;
    double average_entity_value = 0.0;
    double average_equity_value = 0.0;
    double average_per_share = 0.0;
};

CompsResult run_comps(const CompsRequest& request, std::span<const Comparable> comparables);

/// CSV with header `name,entity_value,ebit,sales` and optional
/// `ebit_multiple,sales_multiple` columns; empty cells are absent values.
std::vector<Comparable> parse_comparables(std::string_view text);

}  // namespace accval
