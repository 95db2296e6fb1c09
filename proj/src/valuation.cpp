#include "accval/valuation.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "accval/errors.hpp"
#include "accval/text.hpp"

namespace accval {

namespace {

constexpr double kUndefined = std::numeric_limits<double>::quiet_NaN();

std::string describe_rates(double g, double r) {
    std::ostringstream os;
    os << "growth g=" << text::shortest(g) << " must be below discount rate r=" << text::shortest(r);
    return os.str();
}

/// Perpetuity of a flow that starts one period out and grows at g.
double growing_perpetuity(double next_flow, double g, double r) {
    if (!(r > g)) throw DomainError("continuing value diverges: " + describe_rates(g, r));
    return next_flow / (r - g);
}

struct Setup {
    double rate;
    double growth;
    int horizon;
    DiscountSchedule schedule;
};

Setup prepare(const FlowSeries& s, const Assumptions& a, const ValuationOptions& opts, Model model) {
    s.validate();
    a.validate();
    double rate = a.wacc;
    if (opts.perspective == Perspective::equity) {
        if (model == Model::fcfvm) throw InputError("FCFVM is an entity-perspective model");
        if (!a.equity_cost) throw InputError("equity_cost is required for equity-perspective valuation");
        if (!s.has_equity_series()) {
            throw InputError("equity-perspective valuation needs earnings, book value and dividend series");
        }
        rate = *a.equity_cost;
    }
    if (!(rate > a.sales_growth)) {
        const char* which = opts.perspective == Perspective::equity ? "equity_cost" : "wacc";
        throw DomainError(std::string(model_name(model)) + ": " + describe_rates(a.sales_growth, rate) + " (" + which + ")");
    }
    const int T = s.horizon();
    return {rate, a.sales_growth, T,
            opts.printed_factors ? DiscountSchedule::rounded(rate, T) : DiscountSchedule::exact(rate, T)};
}

void finish(ValuationResult& r, const FlowSeries& s, const Assumptions& a) {
    const double value = r.anchor + r.pv_explicit + r.pv_of_cv;
    const double claims = s.net_financial_liabilities + s.noncontrolling_interest;
    if (r.perspective == Perspective::entity) {
        r.entity_value = value;
        r.equity_value = equity_value(value, s.net_financial_liabilities, s.noncontrolling_interest);
    } else {
        r.equity_value = value;
        r.entity_value = value + claims;
    }
    if (a.shares_outstanding > 0.0) r.per_share = r.equity_value / a.shares_outstanding;
}

void add_schedule(ValuationResult& r, const FlowSeries& s, const DiscountSchedule& d, int t, double flow) {
    const double pv = d.discount(flow, t);
    r.schedule.push_back({s.labels[static_cast<std::size_t>(t)], t, flow, d.factor(t), pv});
    r.pv_explicit += pv;
}

}  // namespace

std::string_view model_name(Model m) {
    switch (m) {
        case Model::fcfvm: return "fcfvm";
        case Model::revm: return "revm";
        case Model::aegm: return "aegm";
    }
    return "?";
}

std::optional<Model> parse_model(std::string_view name) {
    for (const auto m : {Model::fcfvm, Model::revm, Model::aegm}) {
        if (model_name(m) == name) return m;
    }
    return std::nullopt;
}

DiscountSchedule::DiscountSchedule(double rate, bool rounded, int horizon) : rate_(rate), rounded_(rounded) {
    if (!(rate > -1.0)) throw DomainError("discount rate must exceed -100%");
    if (horizon < 0) throw DomainError("negative discount horizon");
    factors_.reserve(static_cast<std::size_t>(horizon) + 1);
    double f = 1.0;
    for (int t = 0; t <= horizon; ++t) {
        factors_.push_back(rounded ? text::round_half_up(f, 2) : f);
        f *= 1.0 + rate;
    }
    if (rounded) {
        for (int t = 1; t <= horizon; ++t) {
            if (factors_[static_cast<std::size_t>(t)] <= 0.0) throw DomainError("rounded discount factor is not positive");
        }
    }
}

DiscountSchedule DiscountSchedule::exact(double rate, int horizon) {
    return DiscountSchedule(rate, false, horizon);
}

DiscountSchedule DiscountSchedule::rounded(double rate, int horizon) {
    return DiscountSchedule(rate, true, horizon);
}

double DiscountSchedule::factor(int t) const {
    if (t < 0 || t > horizon()) throw DomainError("discount factor requested outside the schedule");
    return factors_[static_cast<std::size_t>(t)];
}

double fcf_method1(double oi_t, double noa_prev, double noa_t) {
    return oi_t - (noa_t - noa_prev);
}

OperatingDeltas operating_deltas(const BalanceSheet& prev, const BalanceSheet& cur, double depreciation) {
    OperatingDeltas d;
    d.receivables = cur.trade_receivables - prev.trade_receivables;
    d.inventories = cur.inventories - prev.inventories;
    d.tax_receivable = cur.current_tax_receivable - prev.current_tax_receivable;
    d.payables = cur.trade_payables - prev.trade_payables;
    d.tax_liabilities = cur.current_tax_liabilities - prev.current_tax_liabilities;
    d.other_noa = cur.other_net_operating_assets - prev.other_net_operating_assets;
    d.depreciation = depreciation;
    d.capex = (cur.ppe_and_intangibles - prev.ppe_and_intangibles) + depreciation;
    return d;
}

double fcf_method2(double oi_t, const OperatingDeltas& d) {
    return oi_t - d.receivables - d.inventories - d.tax_receivable - d.payables - d.tax_liabilities - d.other_noa +
           d.depreciation - d.capex;
}

double continuing_value(double flow_terminal, double g, double r) {
    return growing_perpetuity(flow_terminal * (1.0 + g), g, r);
}

PresentValue present_value(std::span<const double> flows, const DiscountSchedule& schedule) {
    PresentValue pv;
    pv.terms.reserve(flows.size());
    for (std::size_t i = 0; i < flows.size(); ++i) {
        const double term = schedule.discount(flows[i], static_cast<int>(i) + 1);
        pv.terms.push_back(term);
        pv.total += term;
    }
    return pv;
}

PresentValue present_value(std::span<const double> flows, double r) {
    return present_value(flows, DiscountSchedule::exact(r, static_cast<int>(flows.size())));
}

double residual_operating_income(double oi_t, double noa_prev, double wacc) {
    return oi_t - wacc * noa_prev;
}

double residual_earnings(double earn_t, double b_prev, double equity_cost) {
    return earn_t - equity_cost * b_prev;
}

double roce(double earn_t, double b_prev) {
    if (b_prev == 0.0) throw DomainError("ROCE undefined for zero opening book value");
    return earn_t / b_prev;
}

double aeg(double earn_t, double earn_prev, double div_prev, double equity_cost) {
    return (earn_t - earn_prev) - equity_cost * (earn_prev - div_prev);
}

double aoig(double oi_t, double oi_prev, double fcf_prev, double wacc) {
    return (oi_t - oi_prev) - wacc * (oi_prev - fcf_prev);
}

std::vector<double> free_cash_flows(const FlowSeries& s) {
    std::vector<double> out(s.operating_income.size(), kUndefined);
    for (std::size_t t = 1; t < out.size(); ++t) {
        out[t] = fcf_method1(s.operating_income[t], s.net_operating_assets[t - 1], s.net_operating_assets[t]);
    }
    return out;
}

std::vector<double> residual_operating_incomes(const FlowSeries& s, double wacc) {
    std::vector<double> out(s.operating_income.size(), kUndefined);
    for (std::size_t t = 1; t < out.size(); ++t) {
        out[t] = residual_operating_income(s.operating_income[t], s.net_operating_assets[t - 1], wacc);
    }
    return out;
}

ValuationResult value_fcfvm(const FlowSeries& s, const Assumptions& a, const ValuationOptions& opts) {
    const auto setup = prepare(s, a, opts, Model::fcfvm);
    const int T = setup.horizon;
    const auto fcf = free_cash_flows(s);

    ValuationResult r;
    r.model = Model::fcfvm;
    r.rate = setup.rate;
    r.growth = setup.growth;
    for (int t = 1; t <= T; ++t) {
        const double flow = fcf[static_cast<std::size_t>(t)];
        if (flow < 0.0) r.warnings.push_back("negative free cash flow in " + s.labels[static_cast<std::size_t>(t)]);
        add_schedule(r, s, setup.schedule, t, flow);
    }
    const double terminal = fcf[static_cast<std::size_t>(T)];
    if (terminal < 0.0) r.warnings.push_back("continuing value computed on a negative terminal free cash flow");
    r.continuing_value = continuing_value(terminal, setup.growth, setup.rate);
    r.pv_of_cv = setup.schedule.discount(r.continuing_value, T);
    finish(r, s, a);
    return r;
}

ValuationResult value_revm(const FlowSeries& s, const Assumptions& a, const ValuationOptions& opts) {
    const auto setup = prepare(s, a, opts, Model::revm);
    const int T = setup.horizon;
    const bool entity = opts.perspective == Perspective::entity;

    ValuationResult r;
    r.model = Model::revm;
    r.perspective = opts.perspective;
    r.rate = setup.rate;
    r.growth = setup.growth;
    r.anchor = entity ? s.net_operating_assets[0] : s.book_value[0];

    double residual = 0.0;
    for (int t = 1; t <= T; ++t) {
        const auto i = static_cast<std::size_t>(t);
        residual = entity ? residual_operating_income(s.operating_income[i], s.net_operating_assets[i - 1], setup.rate)
                          : residual_earnings(s.comprehensive_earnings[i], s.book_value[i - 1], setup.rate);
        add_schedule(r, s, setup.schedule, t, residual);
    }
    r.continuing_value = continuing_value(residual, setup.growth, setup.rate);
    r.pv_of_cv = setup.schedule.discount(r.continuing_value, T);
    finish(r, s, a);
    return r;
}

// Capitalized abnormal growth: value = X_1/r + sum_{t>=1} [G_{t+1}/r] / (1+r)^t.
// G_2..G_T are explicit; G_{T+1} follows from X_{T+1} = X_T (1 + g) and then
// grows at g, so the tail is [G_{T+1}/r] / (r - g) valued at T - 1.
ValuationResult value_aegm(const FlowSeries& s, const Assumptions& a, const ValuationOptions& opts) {
    const auto setup = prepare(s, a, opts, Model::aegm);
    const int T = setup.horizon;
    const double rate = setup.rate;
    const double g = setup.growth;
    if (!(rate > 0.0)) throw DomainError("aegm: capitalization needs a positive discount rate");
    const bool entity = opts.perspective == Perspective::entity;

    ValuationResult r;
    r.model = Model::aegm;
    r.perspective = opts.perspective;
    r.rate = rate;
    r.growth = g;

    std::vector<double> earnings;
    std::vector<double> retained;  // OI - FCF (reinvested) or Earn - d (retained)
    if (entity) {
        earnings = s.operating_income;
        const auto fcf = free_cash_flows(s);
        retained.resize(earnings.size(), kUndefined);
        for (std::size_t t = 1; t < earnings.size(); ++t) retained[t] = earnings[t] - fcf[t];
    } else {
        earnings = s.comprehensive_earnings;
        retained.resize(earnings.size());
        for (std::size_t t = 0; t < earnings.size(); ++t) retained[t] = earnings[t] - s.dividends[t];
    }
    // Both AEG forms reduce to (X_t - X_{t-1}) - r * retained_{t-1}.
    const auto abnormal_growth = [&](double x_t, std::size_t prev) {
        return (x_t - earnings[prev]) - rate * retained[prev];
    };

    r.anchor = earnings[1] / rate;
    for (int t = 1; t <= T - 1; ++t) {
        const auto i = static_cast<std::size_t>(t);
        add_schedule(r, s, setup.schedule, t, abnormal_growth(earnings[i + 1], i) / rate);
    }
    const auto last = static_cast<std::size_t>(T);
    const double terminal_growth = abnormal_growth(earnings[last] * (1.0 + g), last);
    r.continuing_value = growing_perpetuity(terminal_growth / rate, g, rate);
    r.pv_of_cv = setup.schedule.discount(r.continuing_value, T - 1);
    finish(r, s, a);
    return r;
}

ValuationResult value_model(Model m, const FlowSeries& s, const Assumptions& a, const ValuationOptions& opts) {
    switch (m) {
        case Model::fcfvm: return value_fcfvm(s, a, opts);
        case Model::revm: return value_revm(s, a, opts);
        case Model::aegm: return value_aegm(s, a, opts);
    }
    throw InputError("unknown model");
}

ForwardPe forward_pe_decomposition(const ValuationResult& result, double earn_1, double equity_cost) {
    if (earn_1 == 0.0) throw DomainError("forward P/E undefined for zero forward earnings");
    if (equity_cost == 0.0) throw DomainError("forward P/E capitalization needs a non-zero equity cost");
    ForwardPe out;
    out.capitalization_term = 1.0 / equity_cost;
    out.aeg_premium = result.value() / earn_1 - out.capitalization_term;
    return out;
}

double equity_value(double env, double nfl, double nci) {
    return env - nfl - nci;
}

EquityBridge equity_bridge(double env, double nfl, double nci, double shares) {
    if (!(shares > 0.0)) throw DomainError("share count must be positive");
    const double eqv = equity_value(env, nfl, nci);
    return {eqv, eqv / shares};
}

}  // namespace accval
