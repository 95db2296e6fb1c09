#pragma once

#include <span>
#include <string>
#include <vector>

#include "accval/valuation.hpp"

namespace accval {

/// (alt - base) / base as a fraction; throws DomainError for a zero base.
double percent_change(double base, double alt);

enum class GridAxis { wacc, growth, cross };

struct GridCell {
    GridAxis axis = GridAxis::wacc;
    double wacc = 0.0;
    double growth = 0.0;
    bool valid = true;  // false when wacc <= growth; value fields are then NaN
    double anchor = 0.0;
    double pv_explicit = 0.0;
    double pv_of_cv = 0.0;
    double entity_value = 0.0;
    double equity_value = 0.0;
    double pct_change_env = 0.0;
    double pct_change_eqv = 0.0;
};

struct SensitivityGrid {
    Model model = Model::fcfvm;
    double base_wacc = 0.0;
    double base_growth = 0.0;
    double baseline_entity_value = 0.0;
    double baseline_equity_value = 0.0;
    std::vector<double> wacc_values;
    std::vector<double> growth_values;
    std::vector<GridCell> cells;  // axis order: wacc axis then growth axis, or wacc-major cross product
};

struct GridOptions {
    bool cross = false;
    bool printed_factors = false;
};

/// One-variable-at-a-time grid: WACC varied at the base growth, then growth
/// varied at the base WACC. With `cross`, the full WACC x growth product.
/// Growth only enters the continuing value; the explicit flows are held fixed.
SensitivityGrid sensitivity_grid(const FlowSeries& s, const Assumptions& a, std::span<const double> wacc_values,
                                 std::span<const double> growth_values, Model model, const GridOptions& opts = {});

/// Printed components of one scenario: PV of the explicit flows and PV of the continuing value.
struct ScenarioComponents {
    GridAxis axis = GridAxis::wacc;
    double wacc = 0.0;
    double growth = 0.0;
    double pv_explicit = 0.0;
    double pv_of_cv = 0.0;
};

/// Rebuilds a grid from supplied components (the forecast behind them is not
/// available), bridging each entity value to equity with the given claims.
SensitivityGrid grid_from_components(const ScenarioComponents& baseline, std::span<const ScenarioComponents> cells,
                                     double claims);

/// EnV strictly decreasing along WACC and strictly increasing along growth,
/// over valid cells of each axis (cross grids are checked row- and column-wise).
bool is_monotone(const SensitivityGrid& grid);

}  // namespace accval
