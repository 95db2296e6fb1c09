#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "accval/forecast.hpp"

namespace accval {

enum class Model { fcfvm, revm, aegm };
enum class Perspective { entity, equity };

std::string_view model_name(Model m);
std::optional<Model> parse_model(std::string_view name);

/// Discount factors (1 + r)^t for t = 0..T. In printed-factors mode each factor
/// is rounded half-up to 2 dp (1.07, 1.14, 1.23, 1.31, 1.40 at 7%), which is
/// only meant for row-level reconciliation of printed schedules.
class DiscountSchedule {
public:
    static DiscountSchedule exact(double rate, int horizon);
    static DiscountSchedule rounded(double rate, int horizon);

    double rate() const { return rate_; }
    bool is_rounded() const { return rounded_; }
    int horizon() const { return static_cast<int>(factors_.size()) - 1; }
    double factor(int t) const;
    double discount(double amount, int t) const { return amount / factor(t); }

private:
    DiscountSchedule(double rate, bool rounded, int horizon);

    double rate_;
    bool rounded_;
    std::vector<double> factors_;
};

struct ScheduleRow {
    std::string label;
    int t = 0;
    double flow = 0.0;
    double factor = 1.0;
    double present_value = 0.0;
};

/// Outcome of one valuation model. `anchor` is 0 for FCFVM, the opening NOA
/// (or book value) for REVM and the capitalized first-year income for AEGM;
/// value = anchor + pv_explicit + pv_of_cv.
struct ValuationResult {
    Model model = Model::fcfvm;
    Perspective perspective = Perspective::entity;
    double rate = 0.0;
    double growth = 0.0;
    double anchor = 0.0;
    double pv_explicit = 0.0;
    double continuing_value = 0.0;
    double pv_of_cv = 0.0;
    double entity_value = 0.0;
    double equity_value = 0.0;
    std::optional<double> per_share;
    std::vector<ScheduleRow> schedule;
    std::vector<std::string> warnings;

    /// The model's own output: entity value or, for the equity perspective, equity value.
    double value() const { return perspective == Perspective::entity ? entity_value : equity_value; }
};

struct ValuationOptions {
    Perspective perspective = Perspective::entity;
    bool printed_factors = false;
};

double fcf_method1(double oi_t, double noa_prev, double noa_t);

/// Current-minus-prior changes of the signed operating items, plus the
/// period's depreciation and capital expenditure (additions net of disposals).
struct OperatingDeltas {
    double receivables = 0.0;
    double inventories = 0.0;
    double tax_receivable = 0.0;
    double payables = 0.0;         // signed: more negative = payables increased
    double tax_liabilities = 0.0;  // signed like payables
    double other_noa = 0.0;
    double depreciation = 0.0;
    double capex = 0.0;
};

/// Deltas between two balance sheets; capex is backed out of the PPE change.
OperatingDeltas operating_deltas(const BalanceSheet& prev, const BalanceSheet& cur, double depreciation);

double fcf_method2(double oi_t, const OperatingDeltas& d);

/// flow_T * (1 + g) / (r - g); throws DomainError when r <= g.
double continuing_value(double flow_terminal, double g, double r);

struct PresentValue {
    double total = 0.0;
    std::vector<double> terms;  // terms[i] is flows[i] discounted i + 1 periods
};

/// Sum of flows[t-1] / (1 + r)^t for t = 1..n with exact factors.
PresentValue present_value(std::span<const double> flows, double r);
PresentValue present_value(std::span<const double> flows, const DiscountSchedule& schedule);

double residual_operating_income(double oi_t, double noa_prev, double wacc);
double residual_earnings(double earn_t, double b_prev, double equity_cost);
double roce(double earn_t, double b_prev);

/// (earn_t - earn_prev) - equity_cost * (earn_prev - div_prev)
double aeg(double earn_t, double earn_prev, double div_prev, double equity_cost);
/// (oi_t - oi_prev) - wacc * (oi_prev - fcf_prev)
double aoig(double oi_t, double oi_prev, double fcf_prev, double wacc);

/// Per-period flow columns the models consume (index 0 = base year, unused).
std::vector<double> free_cash_flows(const FlowSeries& s);
std::vector<double> residual_operating_incomes(const FlowSeries& s, double wacc);

ValuationResult value_fcfvm(const FlowSeries& s, const Assumptions& a, const ValuationOptions& opts = {});
ValuationResult value_revm(const FlowSeries& s, const Assumptions& a, const ValuationOptions& opts = {});
ValuationResult value_aegm(const FlowSeries& s, const Assumptions& a, const ValuationOptions& opts = {});
ValuationResult value_model(Model m, const FlowSeries& s, const Assumptions& a, const ValuationOptions& opts = {});

struct ForwardPe {
    double capitalization_term = 0.0;  // 1 / equity_cost
    double aeg_premium = 0.0;          // V / Earn_1 - 1 / equity_cost
};

ForwardPe forward_pe_decomposition(const ValuationResult& result, double earn_1, double equity_cost);

struct EquityBridge {
    double equity_value = 0.0;
    double per_share = 0.0;
};

/// eqv = env - nfl - nci; throws DomainError for a non-positive share count.
EquityBridge equity_bridge(double env, double nfl, double nci, double shares);
double equity_value(double env, double nfl, double nci);

}  // namespace accval
