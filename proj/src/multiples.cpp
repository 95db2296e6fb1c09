#include "accval/multiples.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "accval/errors.hpp"
#include "accval/text.hpp"
#include "accval/valuation.hpp"

namespace accval {

namespace {

constexpr std::array<std::pair<CentralTendency, std::string_view>, 3> kTendencies = {{
    {CentralTendency::median, "median"},
    {CentralTendency::harmonic_mean, "harmonic_mean"},
    {CentralTendency::mean, "mean"},
}};

constexpr std::array<std::pair<Driver, std::string_view>, 4> kDrivers = {{
    {Driver::ebit, "ebit"},
    {Driver::sales, "sales"},
    {Driver::book_value, "book_value"},
    {Driver::earnings, "earnings"},
}};

}  // namespace

std::string_view tendency_name(CentralTendency m) {
    for (const auto& [k, n] : kTendencies) {
        if (k == m) return n;
    }
    return "?";
}

std::optional<CentralTendency> parse_tendency(std::string_view name) {
    if (name == "harmonic") return CentralTendency::harmonic_mean;
    for (const auto& [k, n] : kTendencies) {
        if (n == name) return k;
    }
    return std::nullopt;
}

std::string_view driver_name(Driver d) {
    for (const auto& [k, n] : kDrivers) {
        if (k == d) return n;
    }
    return "?";
}

std::optional<Driver> parse_driver(std::string_view name) {
    for (const auto& [k, n] : kDrivers) {
        if (n == name) return k;
    }
    return std::nullopt;
}

double Comparable::multiple(Driver d) const {
    const auto driver = drivers.find(d);
    if (entity_value && driver != drivers.end()) {
        if (driver->second == 0.0) {
            throw DomainError(name + ": zero " + std::string(driver_name(d)) + " gives no multiple");
        }
        return *entity_value / driver->second;
    }
    const auto given = given_multiples.find(d);
    if (given != given_multiples.end()) return given->second;
    throw InputError(name + ": no " + std::string(driver_name(d)) + " driver or multiple");
}

double central_multiple(std::span<const double> values, CentralTendency method) {
    if (values.empty()) throw InputError("central multiple of an empty set");
    std::vector<double> v(values.begin(), values.end());
    std::sort(v.begin(), v.end());
    const auto n = v.size();
    switch (method) {
        case CentralTendency::median:
            return n % 2 == 1 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
        case CentralTendency::harmonic_mean: {
            double inv = 0.0;
            for (const double x : v) {
                if (!(x > 0.0)) throw DomainError("harmonic mean needs strictly positive values");
                inv += 1.0 / x;
            }
            return static_cast<double>(n) / inv;
        }
        case CentralTendency::mean: {
            double sum = 0.0;
            for (const double x : v) sum += x;
            return sum / static_cast<double>(n);
        }
    }
    throw InputError("unknown central tendency");
}

double value_by_multiple(double multiple, double driver) {
    return multiple * driver;
}

bool CompsRow::deviates() const {
    return supplied_multiple && text::round_half_up(*supplied_multiple, 2) != text::round_half_up(computed_multiple, 2);
}

CompsResult run_comps(const CompsRequest& request, std::span<const Comparable> comparables) {
    if (comparables.empty()) throw InputError("no comparables");
    if (request.drivers.empty() || request.methods.empty()) throw InputError("no drivers or methods requested");

    CompsResult out;
    for (const auto driver : request.drivers) {
        const auto target = request.target.find(driver);
        if (target == request.target.end()) {
            throw InputError("target has no " + std::string(driver_name(driver)) + " driver");
        }
        std::vector<double> multiples;
        for (const auto& c : comparables) multiples.push_back(c.multiple(driver));

        for (const auto method : request.methods) {
            CompsRow row;
            row.driver = driver;
            row.method = method;
            row.computed_multiple = central_multiple(multiples, method);
            if (const auto s = request.supplied.find({driver, method}); s != request.supplied.end()) {
                row.supplied_multiple = s->second;
            }
            row.applied_multiple = row.supplied_multiple.value_or(row.computed_multiple);
            row.entity_value = value_by_multiple(row.applied_multiple, target->second);
            const auto bridge = equity_bridge(row.entity_value, request.net_financial_liabilities,
                                              request.noncontrolling_interest, request.shares);
            row.equity_value = bridge.equity_value;
            row.per_share = bridge.per_share;
            out.rows.push_back(row);
        }
    }
    for (const auto& row : out.rows) {
        out.average_entity_value += row.entity_value;
        out.average_equity_value += row.equity_value;
        out.average_per_share += row.per_share;
    }
    const auto n = static_cast<double>(out.rows.size());
    out.average_entity_value /= n;
    out.average_equity_value /= n;
    out.average_per_share /= n;
    return out;
}

std::vector<Comparable> parse_comparables(std::string_view input) {
    const auto rows = text::lines(input);
    std::vector<std::string_view> header;
    std::vector<Comparable> out;
    for (std::size_t n = 0; n < rows.size(); ++n) {
        const auto line_no = std::to_string(n + 1);
        const auto line = text::trim(rows[n]);
        if (line.empty() || line.starts_with('#')) continue;
        auto fields = text::split(line, ',');
        for (auto& f : fields) f = text::trim(f);

        if (header.empty()) {
            header = fields;
            for (const auto* required : {"name", "entity_value", "ebit", "sales"}) {
                if (std::find(header.begin(), header.end(), std::string_view(required)) == header.end()) {
                    throw InputError(std::string("comparables header lacks column '") + required + "'");
                }
            }
            continue;
        }
        if (fields.size() != header.size()) {
            throw InputError("line " + line_no + ": expected " + std::to_string(header.size()) + " fields");
        }
        Comparable c;
        for (std::size_t i = 0; i < header.size(); ++i) {
            const auto col = header[i];
            const auto cell = fields[i];
            if (col == "name") {
                c.name = std::string(cell);
                continue;
            }
            if (cell.empty()) continue;
            const auto v = text::parse_double(cell);
            if (!v) throw InputError("line " + line_no + ": non-numeric value '" + std::string(cell) + "'");
            if (col == "entity_value") {
                c.entity_value = *v;
            } else if (const auto d = parse_driver(col)) {
                c.drivers[*d] = *v;
            } else if (col.ends_with("_multiple")) {
                const auto d = parse_driver(col.substr(0, col.size() - 9));
                if (!d) throw InputError("line " + line_no + ": unknown column '" + std::string(col) + "'");
                c.given_multiples[*d] = *v;
            } else {
                throw InputError("line " + line_no + ": unknown column '" + std::string(col) + "'");
            }
        }
        if (c.name.empty()) throw InputError("line " + line_no + ": comparable without a name");
        out.push_back(std::move(c));
    }
    if (out.empty()) throw InputError("no comparables");
    return out;
}

}  // namespace accval
