#include <doctest.h>

#include <cmath>
#include <limits>

#include "accval/text.hpp"

using namespace accval::text;

TEST_CASE("parse_double takes whole fields only") {
    CHECK(parse_double("6288.40") == doctest::Approx(6288.40));
    CHECK(parse_double(" -1617.70 ") == doctest::Approx(-1617.70));
    CHECK(parse_double("+0.5") == doctest::Approx(0.5));
    CHECK_FALSE(parse_double("12abc"));
    CHECK_FALSE(parse_double(""));
    CHECK_FALSE(parse_double("nan"));
    CHECK_FALSE(parse_double("inf"));
}

TEST_CASE("round_half_up rounds ties away from zero") {
    CHECK(round_half_up(6106.125, 2) == 6106.13);
    CHECK(round_half_up(-6106.125, 2) == -6106.13);
    CHECK(round_half_up(1.005, 2) == 1.01);  // 1.00499999... as a double
    CHECK(round_half_up(1.0700, 2) == 1.07);
    CHECK(round_half_up(1.4025517307, 2) == 1.40);
}

TEST_CASE("fixed formatting") {
    CHECK(fixed(6288.4, 2) == "6288.40");
    CHECK(fixed(-0.001, 2) == "0.00");
    CHECK(fixed(3.0, 0) == "3");
    CHECK(fixed(std::numeric_limits<double>::quiet_NaN(), 2) == "n/a");
}

TEST_CASE("shortest round-trips") {
    for (const double x : {0.1, 1.0 / 3.0, 6795.248221048, -1e-300, 123456789.0}) {
        CHECK(parse_double(shortest(x)) == x);
    }
}

TEST_CASE("lines strips BOM and CR") {
    const auto ls = lines("\xEF\xBB\xBF" "a,b\r\nc\r\n");
    REQUIRE(ls.size() == 2);
    CHECK(ls[0] == "a,b");
    CHECK(ls[1] == "c");
}
