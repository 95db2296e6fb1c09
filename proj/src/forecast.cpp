#include "accval/forecast.hpp"

#include <cmath>
#include <set>

#include "accval/errors.hpp"
#include "accval/text.hpp"

namespace accval {

namespace {

bool finite(double v) {
    return std::isfinite(v);
}

std::string forecast_label(const std::string& base_label, int t) {
    std::string_view year = base_label;
    if (year.ends_with('E') || year.ends_with('e')) year.remove_suffix(1);
    if (const auto y = text::parse_int(year)) return std::to_string(*y + t) + "E";
    return base_label + "+" + std::to_string(t);
}

}  // namespace

void Assumptions::validate() const {
    if (horizon < 1) throw InputError("horizon must be at least 1 year");
    if (!finite(sales_growth) || !finite(wacc) || !finite(tax_rate) || !finite(profit_margin) ||
        (equity_cost && !finite(*equity_cost))) {
        throw InputError("assumption rates must be finite");
    }
    if (!finite(shares_outstanding) || shares_outstanding < 0.0) {
        throw InputError("shares must be a non-negative number");
    }
}

Assumptions parse_assumptions(std::string_view input) {
    Assumptions a;
    std::set<std::string, std::less<>> seen;
    const auto rows = text::lines(input);
    for (std::size_t n = 0; n < rows.size(); ++n) {
        const auto line_no = std::to_string(n + 1);
        const auto line = text::trim(rows[n]);
        if (line.empty() || line.starts_with('#')) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw InputError("line " + line_no + ": expected key=value");
        const auto key = text::trim(line.substr(0, eq));
        const auto raw = text::trim(line.substr(eq + 1));
        if (!seen.emplace(key).second) throw InputError("line " + line_no + ": duplicate key '" + std::string(key) + "'");

        if (key == "horizon") {
            const auto h = text::parse_int(raw);
            if (!h) throw InputError("line " + line_no + ": horizon must be an integer");
            a.horizon = *h;
            continue;
        }
        const auto v = text::parse_double(raw);
        if (!v) throw InputError("line " + line_no + ": non-numeric value for '" + std::string(key) + "'");
        if (key == "growth") a.sales_growth = *v;
        else if (key == "wacc") a.wacc = *v;
        else if (key == "equity_cost") a.equity_cost = *v;
        else if (key == "tax_rate") a.tax_rate = *v;
        else if (key == "profit_margin") a.profit_margin = *v;
        else if (key == "shares") a.shares_outstanding = *v;
        else if (key == "oi_anchor") a.oi_anchor = *v;
        else if (key == "noa_anchor") a.noa_anchor = *v;
        else throw InputError("line " + line_no + ": unknown key '" + std::string(key) + "'");
    }
    for (const auto* required : {"growth", "wacc"}) {
        if (!seen.contains(std::string_view(required))) {
            throw InputError(std::string("missing required key '") + required + "'");
        }
    }
    a.validate();
    return a;
}

void FlowSeries::validate() const {
    const auto n = operating_income.size();
    if (n < 2) throw InputError("flow series needs a base period and at least one forecast period");
    if (net_operating_assets.size() != n || labels.size() != n || (!sales.empty() && sales.size() != n)) {
        throw InputError("flow series columns have unequal lengths");
    }
    const auto e = comprehensive_earnings.size();
    if (e != book_value.size() || e != dividends.size() || (e != 0 && e != n)) {
        throw InputError("equity series must be absent or aligned with the operating series");
    }
}

double grow(double value, double g, int n) {
    if (n < 0) throw DomainError("grow: negative period count");
    return value * std::pow(1.0 + g, n);
}

double ppe_rollforward(double brought, double additions, double depreciation) {
    return brought + additions - depreciation;
}

FlowSeries project_flows(const StatementSet& set, const Assumptions& a) {
    a.validate();
    const auto& base = set.base();
    const double g = a.sales_growth;
    const int T = a.horizon;

    const double noa0 = a.noa_anchor.value_or(net_operating_assets(base.balance));
    const double oi1 = a.oi_anchor.value_or(base.income.operating_income * (1.0 + g));

    const auto& bs = base.balance;
    const bool equity = base.income.comprehensive_earnings.has_value() && bs.common_equity.has_value();

    FlowSeries s;
    s.net_financial_liabilities = bs.net_financial_liabilities;
    s.noncontrolling_interest = bs.noncontrolling_interest;
    for (int t = 0; t <= T; ++t) {
        s.labels.push_back(t == 0 ? base.period.label : forecast_label(base.period.label, t));
        s.sales.push_back(grow(base.income.sales, g, t));
        s.net_operating_assets.push_back(grow(noa0, g, t));
        s.operating_income.push_back(t == 0 ? base.income.operating_income : grow(oi1, g, t - 1));
        if (equity) {
            s.comprehensive_earnings.push_back(grow(*base.income.comprehensive_earnings, g, t));
            s.book_value.push_back(grow(*bs.common_equity, g, t));
            s.dividends.push_back(t == 0 ? bs.dividends_paid.value_or(0.0)
                                         : s.book_value[t - 1] + s.comprehensive_earnings[t] - s.book_value[t]);
        }
    }
    return s;
}

}  // namespace accval
