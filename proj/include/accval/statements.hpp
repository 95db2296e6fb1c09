#pragma once

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace accval {

/// Period tag. `index` is the offset from the valuation date: 0 is the base
/// year, 1..T are forecast years, negative indices are history.
struct PeriodId {
    std::string label;
    int index = 0;

    friend bool operator==(const PeriodId&, const PeriodId&) = default;
};

/// Reformulated balance sheet, millions of one currency. Operating
/// liabilities (payables, tax liabilities) are stored negative so that net
/// operating assets is a plain sum of the operating lines.
struct BalanceSheet {
    double inventories = 0.0;
    double trade_receivables = 0.0;
    double current_tax_receivable = 0.0;
    double trade_payables = 0.0;
    double current_tax_liabilities = 0.0;
    double ppe_and_intangibles = 0.0;
    double other_net_operating_assets = 0.0;
    double net_financial_liabilities = 0.0;  // >= 0 means net debt
    double noncontrolling_interest = 0.0;
    std::optional<double> common_equity;
    std::optional<double> dividends_paid;

    friend bool operator==(const BalanceSheet&, const BalanceSheet&) = default;
};

BalanceSheet operator+(const BalanceSheet& a, const BalanceSheet& b);

struct IncomeStatement {
    double sales = 0.0;
    std::optional<double> ebit;
    double operating_income = 0.0;  // after tax, including OCI items
    std::optional<double> comprehensive_earnings;

    friend bool operator==(const IncomeStatement&, const IncomeStatement&) = default;
};

struct PeriodStatements {
    PeriodId period;
    BalanceSheet balance;
    IncomeStatement income;

    friend bool operator==(const PeriodStatements&, const PeriodStatements&) = default;
};

/// Fixed item vocabulary of the statements file.
enum class Item {
    sales,
    ebit,
    operating_income,
    comprehensive_earnings,
    inventories,
    trade_receivables,
    current_tax_receivable,
    trade_payables,
    current_tax_liabilities,
    ppe_intangibles,
    other_net_operating_assets,
    net_financial_liabilities,
    noncontrolling_interest,
    common_equity,
    dividends,
};

inline constexpr std::size_t kItemCount = 15;

std::string_view item_name(Item item);
std::optional<Item> parse_item(std::string_view name);
std::span<const Item> all_items();
bool is_required(Item item);

/// Ordered, validated collection of period statements. Indices are strictly
/// increasing and contiguous with exactly one base (index 0) period.
class StatementSet {
public:
    static StatementSet from_periods(std::vector<PeriodStatements> periods);

    const std::vector<PeriodStatements>& periods() const { return periods_; }
    const PeriodStatements& base() const;
    const PeriodStatements& at(int index) const;
    std::size_t size() const { return periods_.size(); }

    friend bool operator==(const StatementSet&, const StatementSet&) = default;

private:
    std::vector<PeriodStatements> periods_;
};

/// Parses the `period,item,value` CSV. Period labels are calendar years with
/// an optional `E` suffix for estimates; the latest actual year is the base.
StatementSet parse_statements(std::string_view text);
std::string serialize_statements(const StatementSet& set);

/// Every monetary value present in the set, in file order.
std::vector<double> statement_values(const StatementSet& set);

double working_capital(const BalanceSheet& bs);
double net_operating_assets(const BalanceSheet& bs);

struct CleanSurplusCheck {
    bool pass = true;
    double residual = 0.0;  // b_prev + earn - div - b_cur

    explicit operator bool() const { return pass; }
};

inline constexpr double kCleanSurplusTolerance = 1e-6;

CleanSurplusCheck check_clean_surplus(double b_prev, double earn, double div, double b_cur,
                                      double tolerance = kCleanSurplusTolerance);

}  // namespace accval
