#include "accval/reconcile.hpp"

#include <cmath>

#include "accval/fixtures.hpp"
#include "accval/multiples.hpp"
#include "accval/sensitivity.hpp"
#include "accval/statements.hpp"
#include "accval/valuation.hpp"

namespace accval {

namespace {

class Builder {
public:
    void add(std::string table, std::string location, double printed, int decimals, double recomputed) {
        ReconciliationRow row;
        row.table = std::move(table);
        row.location = std::move(location);
        row.printed = printed;
        row.decimals = decimals;
        row.recomputed = recomputed;
        row.abs_deviation = printed - recomputed;
        row.rel_deviation = recomputed != 0.0 ? row.abs_deviation / std::abs(recomputed) : 0.0;
        row.classification = classify(printed, decimals, recomputed);
        report_.rows.push_back(std::move(row));
    }

    void t1(const std::string& location, double printed, double recomputed) {
        add("Table 1", location, printed, 2, recomputed);
    }
    void t1(const std::string& location, fixtures::PrintedValue printed, double recomputed) {
        add("Table 1", location, printed.value, printed.decimals, recomputed);
    }

    ReconciliationReport take() { return std::move(report_); }

private:
    ReconciliationReport report_;
};

BalanceSheet printed_sheet(const fixtures::Table1& t, std::size_t i) {
    BalanceSheet bs;
    bs.inventories = t.inventories[i];
    bs.trade_receivables = t.trade_receivables[i];
    bs.current_tax_receivable = t.current_tax_receivable[i];
    bs.trade_payables = t.trade_payables[i];
    bs.current_tax_liabilities = t.current_tax_liabilities[i];
    bs.ppe_and_intangibles = t.ppe_and_intangibles[i];
    bs.other_net_operating_assets = t.other_net_operating_assets[i];
    return bs;
}

std::string at(std::string_view row, std::string_view label) {
    return std::string(row) + " / " + std::string(label);
}

void table1_rows(Builder& b) {
    const auto& t = fixtures::table1();
    const auto series = fixtures::ms_flow_series();
    const auto a = fixtures::ms_assumptions();
    const double g = t.growth;
    const double r = t.wacc;
    const auto printed_schedule = DiscountSchedule::rounded(r, 5);
    const auto L = [&](std::size_t i) { return t.labels[i]; };

    // Balance sheet lines grown from the 2016 column.
    const std::pair<std::string_view, const fixtures::Row6*> grown[] = {
        {"Balance sheet / Inventories", &t.inventories},
        {"Balance sheet / Trade and other receivables", &t.trade_receivables},
        {"Balance sheet / Current tax receivable", &t.current_tax_receivable},
        {"Balance sheet / Trade and other payables", &t.trade_payables},
        {"Balance sheet / Current tax liabilities", &t.current_tax_liabilities},
        {"Balance sheet / PPE and intangible assets", &t.ppe_and_intangibles},
        {"Balance sheet / Other net operating assets", &t.other_net_operating_assets},
    };
    for (const auto& [name, row] : grown) {
        for (std::size_t i = 1; i < 6; ++i) b.t1(at(name, L(i)), (*row)[i], grow((*row)[0], g, static_cast<int>(i)));
    }
    for (std::size_t i = 0; i < 6; ++i) {
        b.t1(at("Balance sheet / Working capital", L(i)), t.working_capital[i], working_capital(printed_sheet(t, i)));
    }
    for (std::size_t i = 0; i < 6; ++i) {
        b.t1(at("Balance sheet / Net operating assets", L(i)), t.net_operating_assets_top[i],
             net_operating_assets(printed_sheet(t, i)));
    }

    // PPE movement: carried = brought + additions - depreciation.
    std::array<double, 6> carried{};
    for (std::size_t i = 0; i < 6; ++i) {
        carried[i] = ppe_rollforward(t.ppe_brought_forward[i], t.ppe_additions[i], std::abs(t.ppe_depreciation[i]));
        if (i > 0) b.t1(at("PPE movement / Brought forward", L(i)), t.ppe_brought_forward[i], carried[i - 1]);
        b.t1(at("PPE movement / Carried forward", L(i)), t.ppe_carried_forward[i], carried[i]);
    }

    for (std::size_t i = 2; i < 6; ++i) {
        b.t1(at("Net operating income", L(i)), t.operating_income[i],
             grow(t.operating_income[1], g, static_cast<int>(i) - 1));
    }

    // FCF method 2 from the printed balance sheet components.
    for (std::size_t i = 1; i < 6; ++i) {
        const auto prev = printed_sheet(t, i - 1);
        const auto cur = printed_sheet(t, i);
        const auto d = operating_deltas(prev, cur, t.ppe_depreciation[i]);
        const std::size_t k = i - 1;
        b.t1(at("FCF method 2 / Increase in receivables", L(i)), t.m2_receivables[k], -d.receivables);
        b.t1(at("FCF method 2 / Increase in inventories", L(i)), t.m2_inventories[k], -d.inventories);
        b.t1(at("FCF method 2 / Increase in payables", L(i)), t.m2_payables[k], -d.payables);
        b.t1(at("FCF method 2 / Increase in other NOA", L(i)), t.m2_other_noa[k], -d.other_noa);
        b.t1(at("FCF method 2 / Additions to PPE", L(i)), t.m2_capex[k], -t.ppe_additions[i]);
        b.t1(at("FCF method 2 / Free cash flow", L(i)), t.m2_fcf[k], fcf_method2(t.operating_income[i], d));
    }

    const auto fcf = free_cash_flows(series);
    for (std::size_t i = 1; i < 6; ++i) {
        const double dnoa = series.net_operating_assets[i] - series.net_operating_assets[i - 1];
        b.t1(at("FCF method 1 / Change in NOA", L(i)), t.m1_change_noa[i - 1], -dnoa);
        b.t1(at("FCF method 1 / Free cash flow", L(i)), t.m1_fcf[i - 1], fcf[i]);
    }

    // FCFVM
    const auto fcfvm = value_fcfvm(series, a);
    const auto fcfvm_printed = value_fcfvm(series, a, {Perspective::entity, true});
    for (std::size_t i = 1; i < 6; ++i) {
        b.t1(at("FCFVM / Discount factor", L(i)), t.discount_factors[i - 1], printed_schedule.factor(static_cast<int>(i)));
        b.t1(at("FCFVM / PV of free cash flow", L(i)), t.fcf_present_values[i - 1],
             fcfvm_printed.schedule[i - 1].present_value);
    }
    b.t1("FCFVM / Total PV to 2021", t.fcf_total_pv, fcfvm_printed.pv_explicit);
    b.t1("FCFVM / Continuing value", t.fcf_continuing_value, fcfvm.continuing_value);
    b.t1("FCFVM / PV of continuing value", t.fcf_pv_of_cv, fcfvm.pv_of_cv);
    b.t1("FCFVM / Entity value", t.fcf_entity_value, fcfvm.entity_value);

    // REVM
    const auto revm = value_revm(series, a);
    const auto revm_printed = value_revm(series, a, {Perspective::entity, true});
    for (std::size_t i = 1; i < 6; ++i) {
        const double noa_prev = series.net_operating_assets[i - 1];
        b.t1(at("REVM / Net operating assets", L(i)), t.revm_net_operating_assets[i],
             grow(t.revm_net_operating_assets[0], g, static_cast<int>(i)));
        b.t1(at("REVM / Capital charge", L(i)), t.revm_capital_charge[i - 1], r * noa_prev);
        b.t1(at("REVM / Residual operating income", L(i)), t.revm_residual_income[i - 1],
             residual_operating_income(series.operating_income[i], noa_prev, r));
        b.t1(at("REVM / Discount factor", L(i)), t.discount_factors[i - 1], printed_schedule.factor(static_cast<int>(i)));
        b.t1(at("REVM / PV of ROI", L(i)), t.revm_present_values[i - 1], revm_printed.schedule[i - 1].present_value);
    }
    b.t1("REVM / Total PV of ROI to 2021", t.revm_total_pv, revm_printed.pv_explicit);
    b.t1("REVM / Continuing value of ROI", t.revm_continuing_value, revm.continuing_value);
    b.t1("REVM / PV of continuing value", t.revm_pv_of_cv, revm.pv_of_cv);
    b.t1("REVM / Entity value", t.revm_entity_value, revm.entity_value);

    // AEGM
    const auto aegm = value_aegm(series, a);
    const auto aegm_printed = value_aegm(series, a, {Perspective::entity, true});
    const auto& oi = series.operating_income;
    for (std::size_t i = 2; i < 6; ++i) {
        const std::size_t k = i - 2;
        const double reinvested = oi[i - 1] - fcf[i - 1];
        b.t1(at("AEGM / Prior year reinvested", L(i)), t.aegm_reinvested[k], reinvested);
        b.t1(at("AEGM / Normal change in earnings", L(i)), t.aegm_normal_change[k], r * reinvested);
        b.t1(at("AEGM / Change in operating income", L(i)), t.aegm_change_in_oi[k], oi[i] - oi[i - 1]);
        b.t1(at("AEGM / AOIG", L(i)), t.aegm_aoig[k], aoig(oi[i], oi[i - 1], fcf[i - 1], r));
    }
    for (std::size_t i = 1; i < 5; ++i) {
        b.t1(at("AEGM / Capitalised next period AOIG", L(i)), t.aegm_capitalized[i - 1], aegm.schedule[i - 1].flow);
        b.t1(at("AEGM / Discount factor", L(i)), t.discount_factors[i - 1], printed_schedule.factor(static_cast<int>(i)));
        b.t1(at("AEGM / PV of capitalised AOIG", L(i)), t.aegm_present_values[i - 1],
             aegm_printed.schedule[i - 1].present_value);
    }
    b.t1("AEGM / Total PV of capitalised AOIG to 2021", t.aegm_total_pv, aegm_printed.pv_explicit);
    b.t1("AEGM / Terminal AOIG", t.aegm_terminal_aoig, aegm.continuing_value * r * (r - g));
    b.t1("AEGM / Continuing value of capitalised AOIG", t.aegm_continuing_value, aegm.continuing_value);
    b.t1("AEGM / PV of continuing value", t.aegm_pv_of_cv, aegm.pv_of_cv);
    b.t1("AEGM / Capitalised operating income 2017E", t.aegm_capitalized_oi, aegm.anchor);
    b.t1("AEGM / Entity value", t.aegm_entity_value, aegm.entity_value);

    b.add("Text", "Comparison / Intrinsic value per share", t.per_share_stated, 2, fcfvm.per_share.value_or(0.0));
}

void table2_rows(Builder& b) {
    const auto& t = fixtures::table2();
    const auto& base = t.columns[t.baseline_column];
    std::vector<ScenarioComponents> cells;
    for (const auto& c : t.columns) cells.push_back({c.axis, c.wacc, c.growth, c.pv_explicit, c.pv_of_cv});
    const auto grid = grid_from_components({base.axis, base.wacc, base.growth, base.pv_explicit, base.pv_of_cv},
                                           cells, t.claims);
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        const auto& c = t.columns[i];
        const auto& cell = grid.cells[i];
        const std::string col = c.axis == GridAxis::wacc ? "g=2%, WACC=" + std::to_string(int(std::lround(c.wacc * 100))) + "%"
                                                         : "WACC=7%, g=" + std::to_string(int(std::lround(c.growth * 100))) + "%";
        b.add("Table 2", "Entity value / " + col, c.entity_value, 2, cell.entity_value);
        b.add("Table 2", "EnV change % / " + col, c.env_change_pct, 2, cell.pct_change_env * 100.0);
        b.add("Table 2", "Equity value / " + col, c.equity_value, 2, cell.equity_value);
        b.add("Table 2", "EqV change % / " + col, c.eqv_change_pct, 2, cell.pct_change_eqv * 100.0);
    }
}

void table3_rows(Builder& b) {
    const auto& t = fixtures::table3();
    const double ebit_m[] = {t.ebit_multiples[0], t.ebit_multiples[1]};
    const double sales_m[] = {t.sales_multiples[0], t.sales_multiples[1]};
    b.add("Table 3", "EnV/EBIT multiple (median)", t.median_ebit, 2, central_multiple(ebit_m, CentralTendency::median));
    b.add("Table 3", "EnV/EBIT multiple (harmonic mean)", t.harmonic_ebit, 2,
          central_multiple(ebit_m, CentralTendency::harmonic_mean));
    b.add("Table 3", "EnV/Sales multiple (median)", t.median_sales, 2, central_multiple(sales_m, CentralTendency::median));
    b.add("Table 3", "EnV/Sales multiple (harmonic mean)", t.harmonic_sales, 2,
          central_multiple(sales_m, CentralTendency::harmonic_mean));

    const auto comps = fixtures::table3_comparables();
    const auto result = run_comps(fixtures::table3_request(true), comps);
    for (std::size_t i = 0; i < result.rows.size(); ++i) {
        const auto& row = result.rows[i];
        const std::string col =
            std::string(row.driver == Driver::ebit ? "EnV/EBIT" : "EnV/Sales") + " " + std::string(tendency_name(row.method));
        b.add("Table 3", "Entity value / " + col, t.entity_values[i], 2, row.entity_value);
        b.add("Table 3", "Intrinsic value of equity / " + col, t.equity_values[i], 2, row.equity_value);
        b.add("Table 3", "Intrinsic value per share / " + col, t.per_share[i], 2, row.per_share);
    }
    b.add("Table 3", "Average entity value", t.average_entity_value, 2, result.average_entity_value);
    b.add("Table 3", "Average equity value", t.average_equity_value, 2, result.average_equity_value);
    b.add("Table 3", "Average share price", t.average_per_share, 2, result.average_per_share);
}

}  // namespace

std::string_view classification_name(Classification c) {
    switch (c) {
        case Classification::match: return "match";
        case Classification::rounding: return "rounding";
        case Classification::errata: return "errata";
    }
    return "?";
}

Classification classify(double printed, int decimals, double recomputed) {
    const double unit = std::pow(10.0, -decimals);
    const double dev = std::abs(printed - recomputed);
    const double slack = 1e-9 * std::max(1.0, std::abs(printed));
    if (dev <= 0.5 * unit + slack) return Classification::match;
    if (dev <= 5.0 * unit + slack) return Classification::rounding;
    return Classification::errata;
}

std::size_t ReconciliationReport::count(Classification c) const {
    std::size_t n = 0;
    for (const auto& row : rows) n += row.classification == c ? 1 : 0;
    return n;
}

const ReconciliationRow* ReconciliationReport::find(std::string_view table, std::string_view location) const {
    for (const auto& row : rows) {
        if (row.table == table && row.location == location) return &row;
    }
    return nullptr;
}

ReconciliationReport reconcile_ms() {
    Builder b;
    table1_rows(b);
    table2_rows(b);
    table3_rows(b);
    return b.take();
}

}  // namespace accval
