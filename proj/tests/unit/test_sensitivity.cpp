#include <doctest.h>

#include <cmath>

#include "accval/errors.hpp"
#include "accval/fixtures.hpp"
#include "accval/sensitivity.hpp"
#include "oracles.hpp"

using namespace accval;

TEST_CASE("percent change") {
    CHECK(percent_change(100.0, 125.0) == doctest::Approx(0.25));
    CHECK_THROWS_AS(percent_change(0.0, 1.0), DomainError);
}

TEST_CASE("Table 2 replay from the printed components") {
    const auto& t = fixtures::table2();
    std::vector<ScenarioComponents> cells;
    for (const auto& c : t.columns) cells.push_back({c.axis, c.wacc, c.growth, c.pv_explicit, c.pv_of_cv});
    const auto grid = grid_from_components(cells[t.baseline_column], cells, t.claims);
    REQUIRE(grid.cells.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) {
        const auto& printed = t.columns[i];
        const auto& cell = grid.cells[i];
        CHECK(cell.entity_value == doctest::Approx(printed.pv_explicit + printed.pv_of_cv));
        CHECK(std::abs(cell.entity_value - printed.entity_value) <= 0.01 + 1e-9);
        CHECK(cell.equity_value == doctest::Approx(cell.entity_value - 1773.80));
        CHECK(std::abs(cell.pct_change_env * 100.0 - printed.env_change_pct) <= 0.01);
        CHECK(std::abs(cell.pct_change_eqv * 100.0 - printed.eqv_change_pct) <= 0.01);
    }
    CHECK(is_monotone(grid));
}

TEST_CASE("one-at-a-time grid on the M&S flows") {
    const auto s = fixtures::ms_flow_series();
    const auto a = fixtures::ms_assumptions();
    const std::vector<double> wacc{0.06, 0.07, 0.08};
    const std::vector<double> growth{0.01, 0.02, 0.03};
    const auto grid = sensitivity_grid(s, a, wacc, growth, Model::fcfvm);
    REQUIRE(grid.cells.size() == 6);
    CHECK(grid.cells[1].pct_change_env == 0.0);
    CHECK(grid.cells[1].entity_value == doctest::Approx(value_fcfvm(s, a).entity_value));
    // growth only moves the continuing value
    CHECK(grid.cells[3].pv_explicit == grid.cells[5].pv_explicit);
    CHECK(is_monotone(grid));

    // along the WACC axis the terminal growth matches the flows, so the models agree there
    const auto revm = sensitivity_grid(s, a, wacc, growth, Model::revm);
    CHECK(is_monotone(revm));
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(std::abs(revm.cells[i].entity_value - grid.cells[i].entity_value) <= 1.0);
    }
}

TEST_CASE("cross grid marks divergent cells instead of failing") {
    const auto s = fixtures::ms_flow_series();
    const auto a = fixtures::ms_assumptions();
    const std::vector<double> wacc{0.05, 0.07};
    const std::vector<double> growth{0.02, 0.06};
    const auto grid = sensitivity_grid(s, a, wacc, growth, Model::fcfvm, {true, false});
    REQUIRE(grid.cells.size() == 4);
    CHECK_FALSE(grid.cells[1].valid);
    CHECK(std::isnan(grid.cells[1].entity_value));
    CHECK(grid.cells[3].valid);
    CHECK(is_monotone(grid));
    CHECK_THROWS_AS(sensitivity_grid(s, a, std::vector<double>{}, growth, Model::fcfvm), InputError);
}

TEST_CASE("entity value falls with WACC and rises with growth on random valid grids") {
    oracle::Rng rng(31);
    const auto s = fixtures::ms_flow_series();
    auto a = fixtures::ms_assumptions();
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> wacc, growth;
        double w = rng.uniform(0.04, 0.08);
        for (int i = 0; i < rng.integer(2, 6); ++i) wacc.push_back(w += rng.uniform(0.001, 0.03));
        double g = rng.uniform(-0.02, 0.01);
        for (int i = 0; i < rng.integer(2, 6); ++i) growth.push_back(g += rng.uniform(0.001, 0.01));
        a.wacc = rng.uniform(growth.back() + 0.005, 0.3);
        a.sales_growth = rng.uniform(-0.02, std::min(a.wacc, wacc.front()) - 0.005);
        const auto grid = sensitivity_grid(s, a, wacc, growth, Model::fcfvm, {rng.integer(0, 1) == 1, false});
        CHECK(is_monotone(grid));
    }
}

TEST_CASE("continuing values scale as the structure of the formula predicts") {
    const auto& t = fixtures::table2();
    // CV at 6% vs 7% on the same flow, PV'd over five years
    const double ratio = t.columns[0].pv_of_cv / t.columns[1].pv_of_cv;
    const double structural = (0.05 / 0.04) * std::pow(1.07 / 1.06, 5);
    CHECK(std::abs(ratio / structural - 1.0) <= 0.001);
}
