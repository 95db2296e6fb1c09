#include "accval/lim.hpp"

#include <cmath>
#include <string>

#include "accval/errors.hpp"
#include "accval/text.hpp"

namespace accval {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw DomainError(what);
}

void check_persistence(double value, const char* name) {
    require(std::isfinite(value) && value >= 0.0 && value < 1.0,
            std::string(name) + " must lie in [0, 1), got " + text::shortest(value));
}

}  // namespace

void validate(const OhlsonParams& p) {
    require(p.rho_e > p.omega1, "divergent LIM: rho_e must exceed omega1");
    require(p.rho_e > p.gamma1, "divergent LIM: rho_e must exceed gamma1");
    check_persistence(p.omega1, "omega1");
    check_persistence(p.gamma1, "gamma1");
    require(p.rho_e > 1.0, "rho_e is a gross rate and must exceed 1");
}

void validate(const FelthamOhlsonParams& p) {
    require(p.rho_f > p.omega1, "divergent LIM: rho_f must exceed omega1");
    require(p.rho_f > p.gamma1, "divergent LIM: rho_f must exceed gamma1");
    require(p.growth_factor < p.rho_f, "divergent LIM: growth factor must be below rho_f");
    require(std::isfinite(p.omega0) && p.omega0 >= 0.0, "omega0 must be non-negative");
    check_persistence(p.omega1, "omega1");
    check_persistence(p.gamma1, "gamma1");
}

OhlsonCoefficients ohlson_coefficients(const OhlsonParams& p) {
    validate(p);
    const double rho = p.rho_e;
    return {p.omega1 / (rho - p.omega1), rho / ((rho - p.omega1) * (rho - p.gamma1))};
}

double ohlson_value(double book, double residual_earnings, double other_info, const OhlsonParams& p) {
    const auto c = ohlson_coefficients(p);
    return book + c.alpha1 * residual_earnings + c.alpha2 * other_info;
}

double ohlson_value_weighted(double book, double earnings, double dividends, double other_info,
                             const OhlsonParams& p) {
    const auto c = ohlson_coefficients(p);
    const double cost = p.rho_e - 1.0;
    return book + c.alpha1 * earnings - c.alpha1 * cost * (book - earnings + dividends) + c.alpha2 * other_info;
}

OhlsonState ohlson_step(const OhlsonState& s, const OhlsonParams& p) {
    return {p.omega1 * s.residual_earnings + s.other_info, p.gamma1 * s.other_info};
}

FelthamOhlsonCoefficients fo_coefficients(const FelthamOhlsonParams& p) {
    validate(p);
    const double rho = p.rho_f;
    const double d1 = rho - p.omega1;
    return {p.omega1 / d1, rho / (d1 * (rho - p.gamma1)), rho * p.omega0 / (d1 * (rho - p.growth_factor))};
}

FelthamOhlsonValue fo_value(double noa, double residual, double other_info, double nfa,
                            const FelthamOhlsonParams& p) {
    const auto c = fo_coefficients(p);
    const double ops = noa + c.alpha1 * residual + c.alpha2 * other_info + c.alpha3 * noa;
    return {ops, ops + nfa};
}

double fo_value_from_book(double book, double residual, double other_info, double noa,
                          const FelthamOhlsonParams& p) {
    const auto c = fo_coefficients(p);
    return book + c.alpha1 * residual + c.alpha2 * other_info + c.alpha3 * noa;
}

FelthamOhlsonState fo_step(const FelthamOhlsonState& s, const FelthamOhlsonParams& p) {
    return {p.omega0 * s.noa + p.omega1 * s.residual + s.other_info, p.growth_factor * s.noa,
            p.gamma1 * s.other_info};
}

}  // namespace accval
