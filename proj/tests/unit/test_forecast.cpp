#include <doctest.h>

#include <cmath>

#include "accval/errors.hpp"
#include "accval/fixtures.hpp"
#include "accval/forecast.hpp"

using namespace accval;

TEST_CASE("assumptions file") {
    const auto a = parse_assumptions(fixtures::ms_assumptions_text());
    CHECK(a.sales_growth == 0.02);
    CHECK(a.wacc == 0.07);
    CHECK(a.horizon == 5);
    CHECK_FALSE(a.equity_cost);
    REQUIRE(a.noa_anchor);
    CHECK(*a.noa_anchor == 5353.70);

    CHECK_THROWS_WITH_AS(parse_assumptions("wacc=0.07\n"), doctest::Contains("growth"), InputError);
    CHECK_THROWS_WITH_AS(parse_assumptions("growth=0.02\nwacc=0.07\nwacc=0.08\n"), doctest::Contains("duplicate"),
                         InputError);
    CHECK_THROWS_WITH_AS(parse_assumptions("growth=0.02\nwacc=0.07\nbeta=1\n"), doctest::Contains("unknown key"),
                         InputError);
    CHECK_THROWS_AS(parse_assumptions("growth=0.02\nwacc=0.07\nhorizon=0\n"), InputError);
    CHECK_THROWS_AS(parse_assumptions("growth=0.02\nwacc=seven\n"), InputError);
}

TEST_CASE("grow") {
    CHECK(grow(100.0, 0.05, 0) == 100.0);
    CHECK(grow(100.0, 0.05, 2) == doctest::Approx(110.25));
    CHECK_THROWS_AS(grow(100.0, 0.05, -1), DomainError);
}

TEST_CASE("PPE roll-forward reproduces the printed 2017E carried figure") {
    const auto& t = fixtures::table1();
    // brought forward + additions - depreciation, depreciation printed as a positive charge in forecasts
    CHECK(ppe_rollforward(t.ppe_brought_forward[1], t.ppe_additions[1], std::abs(t.ppe_depreciation[1])) ==
          doctest::Approx(t.ppe_carried_forward[1]).epsilon(1e-6));
}

TEST_CASE("projection from the M&S statements and anchors") {
    const auto s = project_flows(parse_statements(fixtures::ms_statements_csv()), fixtures::ms_assumptions());
    REQUIRE(s.horizon() == 5);
    CHECK(s.labels.front() == "2016");
    CHECK(s.labels.back() == "2021E");
    CHECK(s.operating_income[0] == doctest::Approx(483.20));
    CHECK(s.operating_income[1] == doctest::Approx(446.84));
    CHECK(s.operating_income[5] == doctest::Approx(446.84 * std::pow(1.02, 4)));
    CHECK(s.net_operating_assets[0] == doctest::Approx(5353.70));
    CHECK(s.net_operating_assets[5] == doctest::Approx(5353.70 * std::pow(1.02, 5)));
    CHECK(s.sales[1] == doctest::Approx(9934.30 * 1.02));
    CHECK(s.net_financial_liabilities == 1762.40);
    CHECK_FALSE(s.has_equity_series());

    // within 0.01 of every printed OI and REVM NOA figure
    const auto& t = fixtures::table1();
    for (int i = 1; i <= 5; ++i) {
        CHECK(std::abs(s.operating_income[i] - t.operating_income[i]) <= 0.01);
        CHECK(std::abs(s.net_operating_assets[i] - t.revm_net_operating_assets[i]) <= 0.01);
    }
}

TEST_CASE("equity series satisfies clean surplus") {
    const char* csv =
        "period,item,value\n"
        "2016,sales,100\n2016,operating_income,10\n2016,comprehensive_earnings,8\n2016,common_equity,60\n"
        "2016,inventories,5\n2016,trade_receivables,4\n2016,current_tax_receivable,1\n2016,trade_payables,-6\n"
        "2016,current_tax_liabilities,-2\n2016,ppe_intangibles,50\n2016,other_net_operating_assets,-3\n"
        "2016,net_financial_liabilities,20\n2016,noncontrolling_interest,1\n";
    auto a = parse_assumptions("growth=0.03\nwacc=0.08\nequity_cost=0.1\nhorizon=4\n");
    const auto s = project_flows(parse_statements(csv), a);
    REQUIRE(s.has_equity_series());
    for (int t = 1; t <= 4; ++t) {
        CHECK(check_clean_surplus(s.book_value[t - 1], s.comprehensive_earnings[t], s.dividends[t], s.book_value[t]));
    }
}
