#include <algorithm>
#include <cmath>
#include <string>

#include "reports.hpp"

namespace accval::cli {

namespace {

std::string axis_name(GridAxis a) {
    switch (a) {
        case GridAxis::wacc: return "wacc";
        case GridAxis::growth: return "growth";
        case GridAxis::cross: return "cross";
    }
    return "?";
}

Cell optional_money(const std::optional<double>& v) {
    return v ? Cell::money(*v) : Cell::str("n/a");
}

}  // namespace

Report valuation_report(const std::vector<ValuationResult>& results, const Assumptions& a,
                        const BenfordReport* screen) {
    Report r;
    r.title = "Valuation";
    r.summary.emplace_back("wacc", Cell::rate(a.wacc));
    if (a.equity_cost) r.summary.emplace_back("equity_cost", Cell::rate(*a.equity_cost));
    r.summary.emplace_back("growth", Cell::rate(a.sales_growth));
    r.summary.emplace_back("tax_rate", Cell::rate(a.tax_rate));
    r.summary.emplace_back("profit_margin", Cell::rate(a.profit_margin));
    if (a.shares_outstanding > 0.0) r.summary.emplace_back("shares", Cell::money(a.shares_outstanding));

    if (!results.empty()) {
        const auto [lo, hi] = std::minmax_element(results.begin(), results.end(),
                                                  [](const auto& x, const auto& y) { return x.value() < y.value(); });
        const double gap = hi->value() - lo->value();
        r.summary.emplace_back("max_model_gap", Cell::money(gap));
        r.summary.emplace_back("max_model_gap_rel", Cell::num(gap / std::abs(hi->value())));
    }
    if (screen) {
        r.summary.emplace_back("benford_verdict", Cell::str(std::string(verdict_name(screen->verdict))));
        r.summary.emplace_back("benford_sample", Cell::integer(screen->histogram.total));
    }

    Table models{"models",
                 {"model", "perspective", "anchor", "pv_explicit", "continuing_value", "pv_of_cv", "entity_value",
                  "equity_value", "per_share"},
                 {}};
    for (const auto& v : results) {
        models.rows.push_back({Cell::str(std::string(model_name(v.model))),
                               Cell::str(v.perspective == Perspective::entity ? "entity" : "equity"),
                               Cell::money(v.anchor), Cell::money(v.pv_explicit), Cell::money(v.continuing_value),
                               Cell::money(v.pv_of_cv), Cell::money(v.entity_value), Cell::money(v.equity_value),
                               optional_money(v.per_share)});
    }
    r.tables.push_back(std::move(models));

    for (const auto& v : results) {
        Table t{std::string(model_name(v.model)), {"period", "t", "flow", "factor", "present_value"}, {}};
        for (const auto& row : v.schedule) {
            t.rows.push_back({Cell::str(row.label), Cell::integer(row.t), Cell::money(row.flow), Cell::num(row.factor),
                              Cell::money(row.present_value)});
        }
        r.tables.push_back(std::move(t));
    }
    return r;
}

Report sensitivity_report(const SensitivityGrid& grid) {
    Report r;
    r.title = "Sensitivity (" + std::string(model_name(grid.model)) + ")";
    r.summary.emplace_back("base_wacc", Cell::rate(grid.base_wacc));
    r.summary.emplace_back("base_growth", Cell::rate(grid.base_growth));
    r.summary.emplace_back("baseline_entity_value", Cell::money(grid.baseline_entity_value));
    r.summary.emplace_back("baseline_equity_value", Cell::money(grid.baseline_equity_value));
    r.summary.emplace_back("monotone", Cell::str(is_monotone(grid) ? "yes" : "no"));

    Table t{"grid",
            {"axis", "wacc", "growth", "pv_explicit", "pv_of_cv", "entity_value", "env_change", "equity_value",
             "eqv_change"},
            {}};
    for (const auto& c : grid.cells) {
        t.rows.push_back({Cell::str(axis_name(c.axis)), Cell::rate(c.wacc), Cell::rate(c.growth),
                          Cell::money(c.pv_explicit), Cell::money(c.pv_of_cv), Cell::money(c.entity_value),
                          Cell::rate(c.pct_change_env), Cell::money(c.equity_value), Cell::rate(c.pct_change_eqv)});
    }
    r.tables.push_back(std::move(t));
    return r;
}

Report comps_report(const CompsResult& result) {
    Report r;
    r.title = "Multiples valuation";
    r.summary.emplace_back("average_entity_value", Cell::money(result.average_entity_value));
    r.summary.emplace_back("average_equity_value", Cell::money(result.average_equity_value));
    r.summary.emplace_back("average_per_share", Cell::money(result.average_per_share));

    Table t{"rows",
            {"driver", "method", "computed_multiple", "supplied_multiple", "applied_multiple", "entity_value",
             "equity_value", "per_share", "flag"},
            {}};
    for (const auto& row : result.rows) {
        t.rows.push_back({Cell::str(std::string(driver_name(row.driver))),
                          Cell::str(std::string(tendency_name(row.method))), Cell::money(row.computed_multiple),
                          optional_money(row.supplied_multiple), Cell::money(row.applied_multiple),
                          Cell::money(row.entity_value), Cell::money(row.equity_value), Cell::money(row.per_share),
                          Cell::str(row.deviates() ? "supplied-differs" : "")});
    }
    r.tables.push_back(std::move(t));
    return r;
}

Report benford_report(const BenfordReport& b) {
    Report r;
    r.title = "First-digit screen";
    r.summary.emplace_back("sample", Cell::integer(b.histogram.total));
    r.summary.emplace_back("chi_square", Cell::num(b.chi_square));
    r.summary.emplace_back("mad", Cell::num(b.mad));
    r.summary.emplace_back("verdict", Cell::str(std::string(verdict_name(b.verdict))));
    Table t{"digits", {"digit", "count", "observed", "expected"}, {}};
    for (std::size_t i = 0; i < 9; ++i) {
        t.rows.push_back({Cell::integer(static_cast<long>(i) + 1), Cell::integer(b.histogram.counts[i]),
                          Cell::num(b.observed[i]), Cell::num(b.expected[i])});
    }
    r.tables.push_back(std::move(t));
    return r;
}

Report ohlson_report(const OhlsonParams& p, double book, double residual, double other_info,
                     std::optional<std::pair<double, double>> earnings_dividends) {
    const auto c = ohlson_coefficients(p);
    Report r;
    r.title = "Ohlson linear information model";
    r.summary.emplace_back("alpha1", Cell::num(c.alpha1));
    r.summary.emplace_back("alpha2", Cell::num(c.alpha2));
    r.summary.emplace_back("value", Cell::money(ohlson_value(book, residual, other_info, p)));
    if (earnings_dividends) {
        r.summary.emplace_back("value_weighted_form",
                               Cell::money(ohlson_value_weighted(book, earnings_dividends->first,
                                                                 earnings_dividends->second, other_info, p)));
    }
    return r;
}

Report fo_report(const FelthamOhlsonParams& p, double noa, double residual, double other_info, double nfa) {
    const auto c = fo_coefficients(p);
    const auto v = fo_value(noa, residual, other_info, nfa, p);
    Report r;
    r.title = "Feltham-Ohlson linear information model";
    r.summary.emplace_back("alpha1", Cell::num(c.alpha1));
    r.summary.emplace_back("alpha2", Cell::num(c.alpha2));
    r.summary.emplace_back("alpha3", Cell::num(c.alpha3));
    r.summary.emplace_back("operations_value", Cell::money(v.operations_value));
    r.summary.emplace_back("total_value", Cell::money(v.total_value));
    return r;
}

Report reconciliation_report(const ReconciliationReport& rec) {
    Report r;
    r.title = "Reconciliation of printed figures";
    r.summary.emplace_back("rows", Cell::integer(static_cast<long>(rec.rows.size())));
    for (const auto c : {Classification::match, Classification::rounding, Classification::errata}) {
        r.summary.emplace_back(std::string(classification_name(c)), Cell::integer(static_cast<long>(rec.count(c))));
    }
    Table t{"rows", {"table", "location", "printed", "recomputed", "deviation", "rel_deviation", "class"}, {}};
    for (const auto& row : rec.rows) {
        t.rows.push_back({Cell::str(row.table), Cell::str(row.location), Cell::money(row.printed),
                          Cell::money(row.recomputed), Cell::money(row.abs_deviation), Cell::rate(row.rel_deviation),
                          Cell::str(std::string(classification_name(row.classification)))});
    }
    r.tables.push_back(std::move(t));
    return r;
}

}  // namespace accval::cli
