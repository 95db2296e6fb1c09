#include <doctest.h>

#include <cmath>
#include <vector>

#include "accval/errors.hpp"
#include "accval/fixtures.hpp"
#include "accval/valuation.hpp"
#include "oracles.hpp"

using namespace accval;

namespace {

Assumptions rates(double g, double r, int horizon) {
    Assumptions a;
    a.sales_growth = g;
    a.wacc = r;
    a.equity_cost = r;
    a.horizon = horizon;
    return a;
}

// Arbitrary explicit operating path whose last period already grows at g,
// the condition under which the three terminal values describe the same tail.
FlowSeries random_entity_path(oracle::Rng& rng, int T, double g) {
    FlowSeries s;
    for (int t = 0; t <= T; ++t) {
        s.labels.push_back("t" + std::to_string(t));
        s.sales.push_back(1000.0);
        s.operating_income.push_back(rng.uniform(-50.0, 400.0));
        s.net_operating_assets.push_back(t == T ? s.net_operating_assets.back() * (1.0 + g) : rng.uniform(100.0, 5000.0));
    }
    s.net_financial_liabilities = rng.uniform(-500.0, 2000.0);
    s.noncontrolling_interest = rng.uniform(0.0, 50.0);
    return s;
}

FlowSeries random_equity_path(oracle::Rng& rng, int T, double g) {
    FlowSeries s = random_entity_path(rng, T, g);
    s.book_value.push_back(rng.uniform(100.0, 3000.0));
    s.comprehensive_earnings.push_back(rng.uniform(0.0, 300.0));
    s.dividends.push_back(rng.uniform(0.0, 100.0));
    for (int t = 1; t <= T; ++t) {
        const double earn = rng.uniform(-50.0, 300.0);
        const double b_prev = s.book_value.back();
        const double b = t == T ? b_prev * (1.0 + g) : b_prev + earn - rng.uniform(-50.0, 150.0);
        s.comprehensive_earnings.push_back(earn);
        s.dividends.push_back(b_prev + earn - b);
        s.book_value.push_back(b);
    }
    return s;
}

}  // namespace

TEST_CASE("discount schedules") {
    const auto exact = DiscountSchedule::exact(0.07, 5);
    const auto printed_schedule = DiscountSchedule::rounded(0.07, 5);
    const double printed[] = {1.07, 1.14, 1.23, 1.31, 1.40};
    for (int t = 1; t <= 5; ++t) {
        CHECK(exact.factor(t) == doctest::Approx(std::pow(1.07, t)).epsilon(1e-14));
        CHECK(printed_schedule.factor(t) == printed[t - 1]);
    }
    CHECK(exact.factor(0) == 1.0);
    CHECK_THROWS_AS(exact.factor(6), DomainError);
}

TEST_CASE("continuing value") {
    CHECK(continuing_value(367.77, 0.02, 0.07) == doctest::Approx(367.77 * 1.02 / 0.05));
    CHECK_THROWS_WITH_AS(continuing_value(100.0, 0.07, 0.07), doctest::Contains("g=0.07"), DomainError);
    CHECK_THROWS_AS(continuing_value(100.0, 0.08, 0.07), DomainError);
}

TEST_CASE("continuing value equals the explicit perpetuity sum") {
    oracle::Rng rng(42);
    for (int i = 0; i < 25; ++i) {
        const double r = rng.uniform(0.02, 0.3);
        const double g = rng.uniform(-0.05, r - 0.01);
        const double flow = rng.uniform(-1000.0, 1000.0);
        CHECK(oracle::close_rel(continuing_value(flow, g, r), oracle::truncated_perpetuity(flow, g, r, 20000), 1e-9));
    }
}

TEST_CASE("FCF method 1 on the printed rows") {
    const auto& t = fixtures::table1();
    for (int i = 1; i <= 5; ++i) {
        const double fcf = fcf_method1(t.operating_income[i], t.revm_net_operating_assets[i - 1],
                                       t.revm_net_operating_assets[i]);
        CHECK(std::abs(fcf - t.m1_fcf[i - 1]) <= 0.01);
    }
}

TEST_CASE("FCF method 2 agrees with method 1 when both come from one balance sheet pair") {
    oracle::Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        BalanceSheet prev, cur;
        for (auto* b : {&prev, &cur}) {
            b->inventories = rng.uniform(0, 1000);
            b->trade_receivables = rng.uniform(0, 1000);
            b->current_tax_receivable = rng.uniform(0, 10);
            b->trade_payables = -rng.uniform(0, 2000);
            b->current_tax_liabilities = -rng.uniform(0, 100);
            b->ppe_and_intangibles = rng.uniform(1000, 8000);
            b->other_net_operating_assets = rng.uniform(-100, 100);
        }
        const double oi = rng.uniform(0, 600);
        const double dep = rng.uniform(0, 500);
        const double m1 = fcf_method1(oi, net_operating_assets(prev), net_operating_assets(cur));
        CHECK(fcf_method2(oi, operating_deltas(prev, cur, dep)) == doctest::Approx(m1).epsilon(1e-10));
    }
}

TEST_CASE("residual income and abnormal growth identities") {
    CHECK(residual_operating_income(446.84, 5353.70, 0.07) == doctest::Approx(72.0810));
    CHECK(residual_earnings(120.0, 1000.0, 0.1) == doctest::Approx(20.0));
    CHECK(roce(120.0, 1000.0) == doctest::Approx(0.12));
    CHECK_THROWS_AS(roce(1.0, 0.0), DomainError);

    oracle::Rng rng(11);
    for (int i = 0; i < 500; ++i) {
        const double r = rng.uniform(0.01, 0.3);
        const double b0 = rng.uniform(1, 5000), e1 = rng.uniform(-100, 500), d1 = rng.uniform(-100, 300);
        const double e2 = rng.uniform(-100, 500);
        const double b1 = b0 + e1 - d1;
        CHECK(std::abs(aeg(e2, e1, d1, r) - (residual_earnings(e2, b1, r) - residual_earnings(e1, b0, r))) <= 1e-9);

        const double noa0 = rng.uniform(1, 5000), oi1 = rng.uniform(-100, 500), oi2 = rng.uniform(-100, 500);
        const double noa1 = rng.uniform(1, 5000);
        const double fcf1 = fcf_method1(oi1, noa0, noa1);
        CHECK(std::abs(aoig(oi2, oi1, fcf1, r) -
                       (residual_operating_income(oi2, noa1, r) - residual_operating_income(oi1, noa0, r))) <= 1e-9);
    }
}

TEST_CASE("M&S fixture: the three entity models agree and match a hand-summed oracle") {
    const auto s = fixtures::ms_flow_series();
    const auto a = fixtures::ms_assumptions();
    const double expected = oracle::fcf_value(s.operating_income, s.net_operating_assets, 0.07, 0.02);
    for (const auto m : {Model::fcfvm, Model::revm, Model::aegm}) {
        const auto v = value_model(m, s, a);
        CHECK(std::abs(v.entity_value - expected) <= 1.0);
        CHECK(v.entity_value > 6790.0);
        CHECK(v.entity_value < 6800.0);
        CHECK(v.equity_value == doctest::Approx(v.entity_value - 1762.40 - 11.40));
        REQUIRE(v.per_share);
        CHECK(*v.per_share == doctest::Approx(v.equity_value / 1635.90));
    }
    CHECK(value_fcfvm(s, a).entity_value == doctest::Approx(expected).epsilon(1e-12));
    CHECK(value_revm(s, a).entity_value ==
          doctest::Approx(oracle::roi_value(s.operating_income, s.net_operating_assets, 0.07, 0.02)).epsilon(1e-12));
}

TEST_CASE("printed factors only change the rounding of the schedule") {
    const auto s = fixtures::ms_flow_series();
    const auto a = fixtures::ms_assumptions();
    ValuationOptions opts;
    opts.printed_factors = true;
    const auto v = value_fcfvm(s, a, opts);
    CHECK(v.schedule[0].factor == 1.07);
    CHECK(v.schedule[4].factor == 1.40);
    CHECK(std::abs(v.entity_value - value_fcfvm(s, a).entity_value) < 60.0);
}

TEST_CASE("entity models agree on arbitrary paths with a steady final period") {
    oracle::Rng rng(2718);
    for (int trial = 0; trial < 300; ++trial) {
        const int T = rng.integer(1, 8);
        const double r = rng.uniform(0.03, 0.25);
        const double g = rng.uniform(0.0, r - 0.01);
        const auto s = random_entity_path(rng, T, g);
        const auto a = rates(g, r, T);
        const double f = value_fcfvm(s, a).entity_value;
        const double ro = value_revm(s, a).entity_value;
        const double ae = value_aegm(s, a).entity_value;
        const double scale = std::max({1.0, std::abs(f), s.net_operating_assets[0]});
        CHECK(std::abs(f - ro) <= 1e-9 * scale);
        CHECK(std::abs(f - ae) <= 1e-9 * scale);
    }
}

TEST_CASE("equity-perspective REVM and AEGM agree under clean surplus") {
    oracle::Rng rng(1618);
    ValuationOptions opts;
    opts.perspective = Perspective::equity;
    for (int trial = 0; trial < 300; ++trial) {
        const int T = rng.integer(1, 8);
        const double r = rng.uniform(0.03, 0.25);
        const double g = rng.uniform(0.0, r - 0.01);
        const auto s = random_equity_path(rng, T, g);
        const auto a = rates(g, r, T);
        const auto re = value_revm(s, a, opts);
        const auto ae = value_aegm(s, a, opts);
        const double scale = std::max({1.0, std::abs(re.equity_value), s.book_value[0]});
        CHECK(std::abs(re.equity_value - ae.equity_value) <= 1e-9 * scale);
        CHECK(re.entity_value == doctest::Approx(re.equity_value + s.net_financial_liabilities + s.noncontrolling_interest));
    }
}

TEST_CASE("valuation is linear in the flows and anchors") {
    oracle::Rng rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const int T = rng.integer(2, 6);
        const double r = rng.uniform(0.03, 0.2);
        const double g = rng.uniform(0.0, r - 0.01);
        const auto s = random_entity_path(rng, T, g);
        const double k = rng.uniform(0.1, 10.0);
        auto scaled = s;
        for (auto& x : scaled.operating_income) x *= k;
        for (auto& x : scaled.net_operating_assets) x *= k;
        const auto a = rates(g, r, T);
        for (const auto m : {Model::fcfvm, Model::revm, Model::aegm}) {
            const double base = value_model(m, s, a).entity_value;
            const double big = value_model(m, scaled, a).entity_value;
            CHECK(std::abs(big - k * base) <= 1e-9 * std::max(1.0, std::abs(k * base)) * 10);
        }
    }
}

TEST_CASE("domain and input errors") {
    auto s = fixtures::ms_flow_series();
    auto a = fixtures::ms_assumptions();
    a.sales_growth = 0.07;
    CHECK_THROWS_WITH_AS(value_fcfvm(s, a), doctest::Contains("wacc"), DomainError);
    a.sales_growth = 0.02;

    ValuationOptions equity;
    equity.perspective = Perspective::equity;
    CHECK_THROWS_AS(value_revm(s, a, equity), InputError);
    a.equity_cost = 0.09;
    CHECK_THROWS_AS(value_revm(s, a, equity), InputError);  // no equity series
    CHECK_THROWS_AS(value_fcfvm(s, a, equity), InputError);

    s.net_operating_assets.pop_back();
    CHECK_THROWS_AS(value_fcfvm(s, a), InputError);
}

TEST_CASE("negative free cash flow is valued with a warning") {
    FlowSeries s;
    s.labels = {"2016", "2017E", "2018E"};
    s.sales = {1, 1, 1};
    s.operating_income = {10, 10, 10};
    s.net_operating_assets = {100, 200, 204};
    const auto v = value_fcfvm(s, rates(0.02, 0.08, 2));
    CHECK_FALSE(v.warnings.empty());
    CHECK(std::isfinite(v.entity_value));
}

TEST_CASE("equity bridge and forward P/E") {
    const auto b = equity_bridge(6795.25, 1762.40, 11.40, 1635.90);
    CHECK(b.equity_value == doctest::Approx(5021.45));
    CHECK(b.per_share == doctest::Approx(5021.45 / 1635.90));
    CHECK_THROWS_AS(equity_bridge(1, 0, 0, 0), DomainError);

    ValuationResult v;
    v.perspective = Perspective::equity;
    v.equity_value = 1200.0;
    const auto pe = forward_pe_decomposition(v, 100.0, 0.1);
    CHECK(pe.capitalization_term == doctest::Approx(10.0));
    CHECK(pe.aeg_premium == doctest::Approx(2.0));
}
