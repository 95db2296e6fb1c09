#include "accval/sensitivity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "accval/errors.hpp"

namespace accval {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

GridCell evaluate(const FlowSeries& s, const Assumptions& base, Model model, bool printed_factors, GridAxis axis,
                  double wacc, double growth) {
    GridCell cell;
    cell.axis = axis;
    cell.wacc = wacc;
    cell.growth = growth;
    if (!(wacc > growth)) {
        cell.valid = false;
        cell.anchor = cell.pv_explicit = cell.pv_of_cv = cell.entity_value = cell.equity_value = kNaN;
        cell.pct_change_env = cell.pct_change_eqv = kNaN;
        return cell;
    }
    Assumptions a = base;
    a.wacc = wacc;
    a.sales_growth = growth;
    const auto r = value_model(model, s, a, {Perspective::entity, printed_factors});
    cell.anchor = r.anchor;
    cell.pv_explicit = r.pv_explicit;
    cell.pv_of_cv = r.pv_of_cv;
    cell.entity_value = r.entity_value;
    cell.equity_value = r.equity_value;
    return cell;
}

void fill_changes(SensitivityGrid& grid) {
    for (auto& c : grid.cells) {
        if (!c.valid) continue;
        c.pct_change_env = percent_change(grid.baseline_entity_value, c.entity_value);
        c.pct_change_eqv = percent_change(grid.baseline_equity_value, c.equity_value);
    }
}

bool strictly_ordered(std::vector<std::pair<double, double>> points, bool increasing) {
    std::sort(points.begin(), points.end());
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].first == points[i - 1].first) continue;
        const bool ok = increasing ? points[i].second > points[i - 1].second : points[i].second < points[i - 1].second;
        if (!ok) return false;
    }
    return true;
}

}  // namespace

double percent_change(double base, double alt) {
    if (base == 0.0) throw DomainError("percent change from a zero base");
    return (alt - base) / base;
}

SensitivityGrid sensitivity_grid(const FlowSeries& s, const Assumptions& a, std::span<const double> wacc_values,
                                 std::span<const double> growth_values, Model model, const GridOptions& opts) {
    if (wacc_values.empty() || growth_values.empty()) throw InputError("sensitivity axes must not be empty");

    SensitivityGrid grid;
    grid.model = model;
    grid.base_wacc = a.wacc;
    grid.base_growth = a.sales_growth;
    grid.wacc_values.assign(wacc_values.begin(), wacc_values.end());
    grid.growth_values.assign(growth_values.begin(), growth_values.end());

    const auto baseline = value_model(model, s, a, {Perspective::entity, opts.printed_factors});
    grid.baseline_entity_value = baseline.entity_value;
    grid.baseline_equity_value = baseline.equity_value;

    if (opts.cross) {
        for (const double r : wacc_values) {
            for (const double g : growth_values) {
                grid.cells.push_back(evaluate(s, a, model, opts.printed_factors, GridAxis::cross, r, g));
            }
        }
    } else {
        for (const double r : wacc_values) {
            grid.cells.push_back(evaluate(s, a, model, opts.printed_factors, GridAxis::wacc, r, a.sales_growth));
        }
        for (const double g : growth_values) {
            grid.cells.push_back(evaluate(s, a, model, opts.printed_factors, GridAxis::growth, a.wacc, g));
        }
    }
    fill_changes(grid);
    return grid;
}

SensitivityGrid grid_from_components(const ScenarioComponents& baseline, std::span<const ScenarioComponents> cells,
                                     double claims) {
    SensitivityGrid grid;
    grid.base_wacc = baseline.wacc;
    grid.base_growth = baseline.growth;
    grid.baseline_entity_value = baseline.pv_explicit + baseline.pv_of_cv;
    grid.baseline_equity_value = grid.baseline_entity_value - claims;
    for (const auto& c : cells) {
        GridCell cell;
        cell.axis = c.axis;
        cell.wacc = c.wacc;
        cell.growth = c.growth;
        cell.pv_explicit = c.pv_explicit;
        cell.pv_of_cv = c.pv_of_cv;
        cell.entity_value = c.pv_explicit + c.pv_of_cv;
        cell.equity_value = cell.entity_value - claims;
        grid.cells.push_back(cell);
        auto& axis_values = c.axis == GridAxis::growth ? grid.growth_values : grid.wacc_values;
        axis_values.push_back(c.axis == GridAxis::growth ? c.growth : c.wacc);
    }
    fill_changes(grid);
    return grid;
}

bool is_monotone(const SensitivityGrid& grid) {
    // Group by the coordinate held fixed, then check the varying one.
    std::map<double, std::vector<std::pair<double, double>>> along_wacc;
    std::map<double, std::vector<std::pair<double, double>>> along_growth;
    for (const auto& c : grid.cells) {
        if (!c.valid) continue;
        if (c.axis != GridAxis::growth) along_wacc[c.growth].emplace_back(c.wacc, c.entity_value);
        if (c.axis != GridAxis::wacc) along_growth[c.wacc].emplace_back(c.growth, c.entity_value);
    }
    for (const auto& [g, pts] : along_wacc) {
        if (!strictly_ordered(pts, false)) return false;
    }
    for (const auto& [r, pts] : along_growth) {
        if (!strictly_ordered(pts, true)) return false;
    }
    return true;
}

}  // namespace accval
