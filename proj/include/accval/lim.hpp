#pragma once

// Linear information model closed forms (Ohlson; Feltham-Ohlson). Rates here
// are gross factors (rho = 1 + cost of capital) and the NOA growth term is a
// gross factor too; the forecast module's growth is a net rate.

namespace accval {

struct OhlsonParams {
    double omega1 = 0.0;  // residual earnings persistence, [0, 1)
    double gamma1 = 0.0;  // other-information persistence, [0, 1)
    double rho_e = 1.0;   // gross equity rate, > 1
};

struct FelthamOhlsonParams {
    double omega0 = 0.0;         // conservatism loading on NOA, >= 0
    double omega1 = 0.0;         // [0, 1)
    double gamma1 = 0.0;         // [0, 1)
    double growth_factor = 1.0;  // gross NOA growth, < rho_f
    double rho_f = 1.0;          // gross entity rate
};

struct OhlsonCoefficients {
    double alpha1 = 0.0;
    double alpha2 = 0.0;
};

struct FelthamOhlsonCoefficients {
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    double alpha3 = 0.0;
};

/// Throws DomainError for parameters outside the admissible region.
void validate(const OhlsonParams& p);
void validate(const FelthamOhlsonParams& p);

OhlsonCoefficients ohlson_coefficients(const OhlsonParams& p);

/// B_t + alpha1 RE_t + alpha2 v_t
double ohlson_value(double book, double residual_earnings, double other_info, const OhlsonParams& p);

/// Same value written over book, earnings and dividends, with the opening
/// book value recovered from clean surplus as B_t - Earn_t + d_t.
double ohlson_value_weighted(double book, double earnings, double dividends, double other_info,
                             const OhlsonParams& p);

struct OhlsonState {
    double residual_earnings = 0.0;
    double other_info = 0.0;
};

/// Expected next state: RE' = omega1 RE + v, v' = gamma1 v.
OhlsonState ohlson_step(const OhlsonState& s, const OhlsonParams& p);

FelthamOhlsonCoefficients fo_coefficients(const FelthamOhlsonParams& p);

struct FelthamOhlsonValue {
    double operations_value = 0.0;  // NOA + alpha1 ROI + alpha2 v + alpha3 NOA
    double total_value = 0.0;       // operations_value + NFA
};

/// `residual` is residual operating income for the entity perspective.
FelthamOhlsonValue fo_value(double noa, double residual, double other_info, double nfa,
                            const FelthamOhlsonParams& p);

/// Book-value form: B + alpha1 ROI + alpha2 v + alpha3 NOA, with B = NOA + NFA.
double fo_value_from_book(double book, double residual, double other_info, double noa,
                          const FelthamOhlsonParams& p);

struct FelthamOhlsonState {
    double residual = 0.0;
    double noa = 0.0;
    double other_info = 0.0;
};

/// Expected next state: ROI' = omega0 NOA + omega1 ROI + v, NOA' = growth NOA, v' = gamma1 v.
FelthamOhlsonState fo_step(const FelthamOhlsonState& s, const FelthamOhlsonParams& p);

}  // namespace accval
