#include <doctest.h>

#include <string>

#include "accval/errors.hpp"
#include "accval/fixtures.hpp"
#include "accval/statements.hpp"
#include "oracles.hpp"

using namespace accval;

namespace {

const char* kMinimal =
    "period,item,value\n"
    "2016,sales,100\n"
    "2016,operating_income,10\n"
    "2016,inventories,5\n"
    "2016,trade_receivables,4\n"
    "2016,current_tax_receivable,1\n"
    "2016,trade_payables,-6\n"
    "2016,current_tax_liabilities,-2\n"
    "2016,ppe_intangibles,50\n"
    "2016,other_net_operating_assets,-3\n"
    "2016,net_financial_liabilities,20\n"
    "2016,noncontrolling_interest,1\n";

std::string with_line(const std::string& extra) { return std::string(kMinimal) + extra; }

}  // namespace

TEST_CASE("M&S base year parses and reformulates") {
    const auto set = parse_statements(fixtures::ms_statements_csv());
    REQUIRE(set.size() == 1);
    const auto& base = set.base();
    CHECK(base.period.label == "2016");
    CHECK(base.income.sales == doctest::Approx(9934.30));
    REQUIRE(base.income.ebit);
    CHECK(*base.income.ebit == doctest::Approx(746.50));
    // 799.90 + 321.10 + 1.60 - 1617.70 - 75.20
    CHECK(working_capital(base.balance) == doctest::Approx(-570.30));
    CHECK(net_operating_assets(base.balance) == doctest::Approx(-570.30 + 5829.90 - 67.60));
}

TEST_CASE("statement parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_statements(with_line("2016,goodwill,3\n")), doctest::Contains("line 13"), InputError);
    CHECK_THROWS_WITH_AS(parse_statements(with_line("2016,sales,1\n")), doctest::Contains("duplicate"), InputError);
    CHECK_THROWS_WITH_AS(parse_statements(with_line("2016,ebit,abc\n")), doctest::Contains("non-numeric"),
                         InputError);
    CHECK_THROWS_AS(parse_statements(with_line("20x6,ebit,1\n")), InputError);
    CHECK_THROWS_AS(parse_statements("period,item,value\n"), InputError);
    CHECK_THROWS_AS(parse_statements("year,item,value\n2016,sales,1\n"), InputError);
}

TEST_CASE("operating liabilities must be entered negative") {
    std::string text = kMinimal;
    text.replace(text.find("-6"), 2, "6");
    CHECK_THROWS_WITH_AS(parse_statements(text), doctest::Contains("negative"), InputError);
}

TEST_CASE("missing required item is rejected") {
    std::string text = kMinimal;
    text.erase(text.find("2016,inventories"), std::string("2016,inventories,5\n").size());
    CHECK_THROWS_WITH_AS(parse_statements(text), doctest::Contains("inventories"), InputError);
}

TEST_CASE("estimate periods follow the base and must be contiguous") {
    std::string text = kMinimal;
    for (const auto* year : {"2017E", "2019E"}) {
        std::string block = kMinimal;
        block.erase(0, block.find('\n') + 1);
        std::size_t pos = 0;
        while ((pos = block.find("2016", pos)) != std::string::npos) block.replace(pos, 4, year);
        text += block;
    }
    CHECK_THROWS_WITH_AS(parse_statements(text), doctest::Contains("contiguous"), InputError);
}

TEST_CASE("serialize then parse is the identity") {
    oracle::Rng rng(20240611);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<PeriodStatements> periods;
        const int n = rng.integer(1, 4);
        for (int i = 0; i < n; ++i) {
            PeriodStatements p;
            p.period = {std::to_string(2016 + i) + (i == 0 ? "" : "E"), i};
            auto& b = p.balance;
            b.inventories = rng.uniform(0, 1e4);
            b.trade_receivables = rng.uniform(0, 1e4);
            b.current_tax_receivable = rng.uniform(0, 10);
            b.trade_payables = -rng.uniform(0, 1e4);
            b.current_tax_liabilities = -rng.uniform(0, 100);
            b.ppe_and_intangibles = rng.uniform(0, 1e5);
            b.other_net_operating_assets = rng.uniform(-100, 100);
            b.net_financial_liabilities = rng.uniform(-1e3, 1e4);
            b.noncontrolling_interest = rng.uniform(0, 50);
            if (rng.integer(0, 1)) b.common_equity = rng.uniform(1, 1e4);
            p.income.sales = rng.uniform(1, 1e5);
            p.income.operating_income = rng.uniform(-1e3, 1e4);
            if (rng.integer(0, 1)) p.income.ebit = rng.uniform(-1e3, 1e4);
            periods.push_back(p);
        }
        const auto set = StatementSet::from_periods(periods);
        CHECK(parse_statements(serialize_statements(set)) == set);
    }
}

TEST_CASE("balance sheet aggregation is permutation-invariant") {
    oracle::Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<BalanceSheet> parts(5);
        for (auto& b : parts) {
            b.inventories = rng.uniform(0, 100);
            b.trade_payables = -rng.uniform(0, 100);
            b.ppe_and_intangibles = rng.uniform(0, 1000);
        }
        BalanceSheet forward, backward;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            forward = forward + parts[i];
            backward = backward + parts[parts.size() - 1 - i];
        }
        CHECK(net_operating_assets(forward) == doctest::Approx(net_operating_assets(backward)).epsilon(1e-12));
    }
}

TEST_CASE("clean surplus check") {
    CHECK(check_clean_surplus(100.0, 12.0, 4.0, 108.0));
    const auto broken = check_clean_surplus(100.0, 12.0, 4.0, 107.0);
    CHECK_FALSE(broken.pass);
    CHECK(broken.residual == doctest::Approx(1.0));
}
