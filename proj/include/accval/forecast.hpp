#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "accval/statements.hpp"

namespace accval {

/// Forecasting and discounting assumptions. Rates are net (0.02 = 2%).
struct Assumptions {
    double sales_growth = 0.0;           // g
    double wacc = 0.0;                   // entity cost of capital, rho_F - 1
    std::optional<double> equity_cost;   // rho_E - 1; required for equity-perspective models
    int horizon = 5;                     // T
    double tax_rate = 0.0;               // report metadata only
    double profit_margin = 0.0;          // report metadata only
    double shares_outstanding = 0.0;     // millions; 0 = no per-share figure
    std::optional<double> oi_anchor;     // first forecast OI; default base OI * (1 + g)
    std::optional<double> noa_anchor;    // replaces the statement-derived base NOA

    /// Checks T >= 1, finite rates and a non-negative share count.
    void validate() const;
};

/// Reads `key=value` lines. Keys: growth, wacc, equity_cost, horizon,
/// tax_rate, profit_margin, shares, oi_anchor, noa_anchor.
Assumptions parse_assumptions(std::string_view text);

/// Aligned per-period flows; element 0 is the base year, 1..T the forecast.
/// The equity series (earnings, book value, dividends) are either all empty
/// or all the same length as the operating series.
struct FlowSeries {
    std::vector<std::string> labels;
    std::vector<double> sales;
    std::vector<double> operating_income;
    std::vector<double> net_operating_assets;
    std::vector<double> comprehensive_earnings;
    std::vector<double> book_value;
    std::vector<double> dividends;
    double net_financial_liabilities = 0.0;  // base-year claims for the equity bridge
    double noncontrolling_interest = 0.0;

    int horizon() const { return static_cast<int>(operating_income.size()) - 1; }
    bool has_equity_series() const { return !comprehensive_earnings.empty(); }
    void validate() const;
};

/// value * (1 + g)^n
double grow(double value, double g, int n);

/// brought + additions - depreciation
double ppe_rollforward(double brought, double additions, double depreciation);

/// Projects the base period forward: sales and NOA grow at g from the base;
/// OI starts at the anchor (default base OI * (1 + g)) and grows at g. When
/// the base carries earnings and common equity, those grow at g as well and
/// dividends follow from clean surplus.
FlowSeries project_flows(const StatementSet& base, const Assumptions& a);

}  // namespace accval
