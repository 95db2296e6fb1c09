#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "accval/forecast.hpp"
#include "accval/multiples.hpp"
#include "accval/sensitivity.hpp"

// Marks & Spencer case data as printed in the source tables (2-dp figures,
// millions GBP). Columns run 2016, 2017E .. 2021E; five-element rows start
// at 2017E, four-element AEGM rows at 2018E (or 2017E for capitalized rows).
namespace accval::fixtures {

using Row6 = std::array<double, 6>;
using Row5 = std::array<double, 5>;
using Row4 = std::array<double, 4>;

struct PrintedValue {
    double value;
    int decimals;  // printed precision
};

struct Table1 {
    std::array<std::string_view, 6> labels;
    Row6 operating_income;

    Row6 inventories;
    Row6 trade_receivables;
    Row6 current_tax_receivable;
    Row6 trade_payables;
    Row6 current_tax_liabilities;
    std::array<PrintedValue, 6> working_capital;
    Row6 ppe_and_intangibles;
    Row6 other_net_operating_assets;
    std::array<PrintedValue, 6> net_operating_assets_top;

    Row6 ppe_brought_forward;
    Row6 ppe_additions;
    Row6 ppe_depreciation;  // 2016 printed with a minus sign
    Row6 ppe_carried_forward;

    // FCF method 2 (contributions to FCF as printed)
    Row5 m2_receivables;
    Row5 m2_inventories;
    Row5 m2_payables;
    Row5 m2_other_noa;
    Row5 m2_depreciation;
    Row5 m2_capex;
    Row5 m2_fcf;
    // FCF method 1
    Row5 m1_change_noa;
    Row5 m1_fcf;

    Row5 discount_factors;
    Row5 fcf_present_values;
    double fcf_total_pv;
    double fcf_continuing_value;
    double fcf_pv_of_cv;
    double fcf_entity_value;

    Row6 revm_net_operating_assets;
    Row5 revm_capital_charge;
    Row5 revm_residual_income;
    Row5 revm_present_values;
    double revm_total_pv;
    double revm_continuing_value;
    double revm_pv_of_cv;
    double revm_entity_value;

    Row4 aegm_reinvested;       // 2018E..2021E
    Row4 aegm_normal_change;    // 2018E..2021E
    std::array<PrintedValue, 4> aegm_change_in_oi;  // 2018E..2021E
    std::array<PrintedValue, 4> aegm_aoig;          // 2018E..2021E
    Row4 aegm_capitalized;      // 2017E..2020E
    Row4 aegm_present_values;   // 2017E..2020E
    double aegm_total_pv;
    double aegm_terminal_aoig;
    double aegm_continuing_value;
    double aegm_pv_of_cv;
    double aegm_capitalized_oi;
    double aegm_entity_value;

    double per_share_stated;  // text of the comparison section
    double shares_in_issue;
    double net_financial_liabilities;
    double noncontrolling_interest;
    double growth;
    double wacc;
};

const Table1& table1();

/// Flow series from the printed OI row and the REVM-block NOA row.
FlowSeries ms_flow_series();
Assumptions ms_assumptions();

struct Table2Column {
    GridAxis axis;
    double wacc;
    double growth;
    double pv_explicit;
    double pv_of_cv;
    double entity_value;
    double env_change_pct;
    double equity_value;
    double eqv_change_pct;
};

struct Table2 {
    std::array<Table2Column, 6> columns;
    double claims;  // net financial liabilities + non-controlling interest
    std::size_t baseline_column;
};

const Table2& table2();

struct Table3 {
    std::array<std::string_view, 2> peers;
    std::array<double, 2> ebit_multiples;
    std::array<double, 2> sales_multiples;
    double median_ebit;
    double harmonic_ebit;
    double median_sales;
    double harmonic_sales;
    double ebit;
    double sales;
    double net_financial_liabilities;
    double noncontrolling_interest;
    double shares;
    Row4 entity_values;  // ebit median, ebit harmonic, sales median, sales harmonic
    Row4 equity_values;
    Row4 per_share;
    double average_entity_value;
    double average_equity_value;
    double average_per_share;
};

const Table3& table3();

std::vector<Comparable> table3_comparables();
/// Comps request replaying the printed multiples verbatim.
CompsRequest table3_request(bool supply_printed_multiples);

/// Embedded copies of the files shipped under data/.
std::string_view ms_statements_csv();
std::string_view ms_assumptions_text();
std::string_view table3_comparables_csv();

}  // namespace accval::fixtures
