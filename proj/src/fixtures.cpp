#include "accval/fixtures.hpp"

#include "fixture_data.hpp"

namespace accval::fixtures {

const Table1& table1() {
    static const Table1 t{
        .labels = {"2016", "2017E", "2018E", "2019E", "2020E", "2021E"},
        .operating_income = {483.20, 446.84, 455.77, 464.89, 474.19, 483.67},

        .inventories = {799.90, 815.90, 832.22, 848.86, 865.84, 883.15},
        .trade_receivables = {321.10, 327.52, 334.07, 340.75, 347.57, 354.52},
        .current_tax_receivable = {1.60, 1.63, 1.66, 1.70, 1.73, 1.77},
        .trade_payables = {-1617.70, -1650.05, -1683.06, -1716.72, -1751.0, -1786.07},
        .current_tax_liabilities = {-75.20, -76.70, -78.24, -79.80, -81.40, -83.03},
        .working_capital = {{{-570.30, 2}, {-505, 0}, {-593.35, 2}, {-641.14, 2}, {-617.31, 2}, {-629.66, 2}}},
        .ppe_and_intangibles = {5829.90, 5946.50, 6065.43, 6186.74, 6310.47, 6436.68},
        .other_net_operating_assets = {-67.60, -68.95, -70.33, -71.74, -73.17, -74.64},
        .net_operating_assets_top = {{{5192, 0}, {5372.55, 2}, {5401.75, 2}, {5473.86, 2}, {5619.99, 2}, {5732.38, 2}}},

        .ppe_brought_forward = {5889.30, 5829.90, 5946.50, 6065.43, 6186.74, 6310.47},
        .ppe_additions = {503.40, 513.47, 523.74, 534.21, 544.90, 555.79},
        .ppe_depreciation = {-562.80, 396.87, 404.81, 412.90, 421.16, 429.58},
        .ppe_carried_forward = {5829.30, 5946.50, 6065.43, 6186.74, 6310.47, 6436.68},

        .m2_receivables = {-6.42, -6.55, -6.68, -6.82, -6.95},
        .m2_inventories = {-16.00, -16.32, -16.64, -16.98, -17.31},
        .m2_payables = {32.35, 33.01, 33.66, 34.33, 35.02},
        .m2_other_noa = {1.35, 1.38, 1.41, 1.43, 1.47},
        .m2_depreciation = {396.87, 404.81, 412.90, 421.16, 429.58},
        .m2_capex = {-818.86, -835.23, -851.94, -868.98, -886.36},
        .m2_fcf = {339.77, 346.55, 353.49, 360.56, 367.77},
        .m1_change_noa = {-107.07, -109.22, -111.40, -113.63, -115.90},
        .m1_fcf = {339.77, 346.55, 353.49, 360.56, 367.77},

        .discount_factors = {1.07, 1.14, 1.23, 1.31, 1.40},
        .fcf_present_values = {317.54, 303.99, 287.39, 275.24, 262.69},
        .fcf_total_pv = 1446.85,
        .fcf_continuing_value = 7501.51,
        .fcf_pv_of_cv = 5358.22,
        .fcf_entity_value = 6945.31,

        .revm_net_operating_assets = {5353.70, 5460.77, 5569.99, 5681.39, 5795.02, 5910.92},
        .revm_capital_charge = {374.76, 382.25, 389.90, 397.70, 405.65},
        .revm_residual_income = {72.08, 73.52, 74.99, 76.49, 78.02},
        .revm_present_values = {67.36, 64.50, 60.97, 58.39, 55.73},
        .revm_total_pv = 306.95,
        .revm_continuing_value = 1591.61,
        .revm_pv_of_cv = 1284.66,
        .revm_entity_value = 6945.31,

        .aegm_reinvested = {107.07, 109.22, 111.40, 113.63},
        .aegm_normal_change = {6.26, 6.37, 6.53, 6.68},
        .aegm_change_in_oi = {{{8.93, 2}, {9.12, 2}, {9.3, 1}, {9.48, 2}}},
        .aegm_aoig = {{{2.67, 2}, {2.75, 2}, {2.77, 2}, {2.8, 1}}},
        .aegm_capitalized = {44.82, 45.71, 46.63, 47.56},
        .aegm_present_values = {41.89, 40.10, 37.91, 36.31},
        .aegm_total_pv = 180.23,
        .aegm_terminal_aoig = 3.84,
        .aegm_continuing_value = 1119.80,
        .aegm_pv_of_cv = 854.29,
        .aegm_capitalized_oi = 7127.51,
        .aegm_entity_value = 6945.31,

        .per_share_stated = 3.08,
        .shares_in_issue = 1635.90,
        .net_financial_liabilities = 1762.40,
        .noncontrolling_interest = 11.40,
        .growth = 0.02,
        .wacc = 0.07,
    };
    return t;
}

FlowSeries ms_flow_series() {
    const auto& t = table1();
    FlowSeries s;
    for (std::size_t i = 0; i < 6; ++i) {
        s.labels.emplace_back(t.labels[i]);
        s.operating_income.push_back(t.operating_income[i]);
        s.net_operating_assets.push_back(t.revm_net_operating_assets[i]);
    }
    s.net_financial_liabilities = t.net_financial_liabilities;
    s.noncontrolling_interest = t.noncontrolling_interest;
    return s;
}

Assumptions ms_assumptions() {
    const auto& t = table1();
    Assumptions a;
    a.sales_growth = t.growth;
    a.wacc = t.wacc;
    a.horizon = 5;
    a.tax_rate = 0.28;
    a.profit_margin = 0.09;
    a.shares_outstanding = t.shares_in_issue;
    a.oi_anchor = t.operating_income[1];
    a.noa_anchor = t.revm_net_operating_assets[0];
    return a;
}

const Table2& table2() {
    static const Table2 t{
        .columns = {{
            {GridAxis::wacc, 0.06, 0.02, 1785.10, 8417.43, 10202.54, 25.00, 8428.74, 31.94},
            {GridAxis::wacc, 0.07, 0.02, 1736.93, 6425.10, 8162.03, 0.0, 6388.23, 0.0},
            {GridAxis::wacc, 0.08, 0.02, 1690.77, 5110.92, 6801.69, -16.67, 5027.89, -21.29},
            {GridAxis::growth, 0.07, 0.01, 1736.93, 5301.76, 7038.69, -13.76, 5264.89, -17.58},
            {GridAxis::growth, 0.07, 0.02, 1736.93, 6425.10, 8162.03, 0.0, 6388.23, 0.0},
            {GridAxis::growth, 0.07, 0.03, 1736.93, 8110.12, 9847.04, 20.64, 8073.24, 26.38},
        }},
        .claims = 1762.40 + 11.40,
        .baseline_column = 1,
    };
    return t;
}

const Table3& table3() {
    static const Table3 t{
        .peers = {"Tesco", "Sainsbury's"},
        .ebit_multiples = {10.6, 11.0},
        .sales_multiples = {1.0, 0.6},
        .median_ebit = 10.8,
        .harmonic_ebit = 10.53,
        .median_sales = 0.8,
        .harmonic_sales = 0.77,
        .ebit = 746.50,
        .sales = 9934.30,
        .net_financial_liabilities = 1762.40,
        .noncontrolling_interest = 11.40,
        .shares = 1605.51,
        .entity_values = {8062.20, 7860.65, 7947.44, 7649.41},
        .equity_values = {6288.40, 6086.85, 6173.64, 5875.61},
        .per_share = {3.92, 3.79, 3.85, 3.66},
        .average_entity_value = 7879.92,
        .average_equity_value = 6106.13,
        .average_per_share = 3.80,
    };
    return t;
}

std::vector<Comparable> table3_comparables() {
    const auto& t = table3();
    std::vector<Comparable> out;
    for (std::size_t i = 0; i < 2; ++i) {
        Comparable c;
        c.name = std::string(t.peers[i]);
        c.given_multiples[Driver::ebit] = t.ebit_multiples[i];
        c.given_multiples[Driver::sales] = t.sales_multiples[i];
        out.push_back(std::move(c));
    }
    return out;
}

CompsRequest table3_request(bool supply_printed_multiples) {
    const auto& t = table3();
    CompsRequest r;
    r.target = {{Driver::ebit, t.ebit}, {Driver::sales, t.sales}};
    r.net_financial_liabilities = t.net_financial_liabilities;
    r.noncontrolling_interest = t.noncontrolling_interest;
    r.shares = t.shares;
    r.drivers = {Driver::ebit, Driver::sales};
    r.methods = {CentralTendency::median, CentralTendency::harmonic_mean};
    if (supply_printed_multiples) {
        r.supplied[{Driver::ebit, CentralTendency::harmonic_mean}] = t.harmonic_ebit;
        r.supplied[{Driver::sales, CentralTendency::harmonic_mean}] = t.harmonic_sales;
    }
    return r;
}

std::string_view ms_statements_csv() {
    return data::kMsStatements;
}

std::string_view ms_assumptions_text() {
    return data::kMsAssumptions;
}

std::string_view table3_comparables_csv() {
    return data::kTable3Comparables;
}

}  // namespace accval::fixtures
