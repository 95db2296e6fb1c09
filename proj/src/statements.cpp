#include "accval/statements.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "accval/errors.hpp"
#include "accval/text.hpp"

namespace accval {

namespace {

constexpr std::array<Item, kItemCount> kItems = {
    Item::sales,
    Item::ebit,
    Item::operating_income,
    Item::comprehensive_earnings,
    Item::inventories,
    Item::trade_receivables,
    Item::current_tax_receivable,
    Item::trade_payables,
    Item::current_tax_liabilities,
    Item::ppe_intangibles,
    Item::other_net_operating_assets,
    Item::net_financial_liabilities,
    Item::noncontrolling_interest,
    Item::common_equity,
    Item::dividends,
};

constexpr std::array<std::string_view, kItemCount> kNames = {
    "sales",
    "ebit",
    "operating_income",
    "comprehensive_earnings",
    "inventories",
    "trade_receivables",
    "current_tax_receivable",
    "trade_payables",
    "current_tax_liabilities",
    "ppe_intangibles",
    "other_net_operating_assets",
    "net_financial_liabilities",
    "noncontrolling_interest",
    "common_equity",
    "dividends",
};

struct YearLabel {
    int year = 0;
    bool estimate = false;
};

std::optional<YearLabel> parse_label(std::string_view label) {
    YearLabel out;
    if (label.ends_with('E') || label.ends_with('e')) {
        out.estimate = true;
        label.remove_suffix(1);
    }
    if (label.empty() || !std::all_of(label.begin(), label.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        return std::nullopt;
    }
    const auto year = text::parse_int(label);
    if (!year) return std::nullopt;
    out.year = *year;
    return out;
}

void assign(PeriodStatements& p, Item item, double v) {
    auto& bs = p.balance;
    auto& is = p.income;
    switch (item) {
        case Item::sales: is.sales = v; break;
        case Item::ebit: is.ebit = v; break;
        case Item::operating_income: is.operating_income = v; break;
        case Item::comprehensive_earnings: is.comprehensive_earnings = v; break;
        case Item::inventories: bs.inventories = v; break;
        case Item::trade_receivables: bs.trade_receivables = v; break;
        case Item::current_tax_receivable: bs.current_tax_receivable = v; break;
        case Item::trade_payables: bs.trade_payables = v; break;
        case Item::current_tax_liabilities: bs.current_tax_liabilities = v; break;
        case Item::ppe_intangibles: bs.ppe_and_intangibles = v; break;
        case Item::other_net_operating_assets: bs.other_net_operating_assets = v; break;
        case Item::net_financial_liabilities: bs.net_financial_liabilities = v; break;
        case Item::noncontrolling_interest: bs.noncontrolling_interest = v; break;
        case Item::common_equity: bs.common_equity = v; break;
        case Item::dividends: bs.dividends_paid = v; break;
    }
}

std::optional<double> lookup(const PeriodStatements& p, Item item) {
    const auto& bs = p.balance;
    const auto& is = p.income;
    switch (item) {
        case Item::sales: return is.sales;
        case Item::ebit: return is.ebit;
        case Item::operating_income: return is.operating_income;
        case Item::comprehensive_earnings: return is.comprehensive_earnings;
        case Item::inventories: return bs.inventories;
        case Item::trade_receivables: return bs.trade_receivables;
        case Item::current_tax_receivable: return bs.current_tax_receivable;
        case Item::trade_payables: return bs.trade_payables;
        case Item::current_tax_liabilities: return bs.current_tax_liabilities;
        case Item::ppe_intangibles: return bs.ppe_and_intangibles;
        case Item::other_net_operating_assets: return bs.other_net_operating_assets;
        case Item::net_financial_liabilities: return bs.net_financial_liabilities;
        case Item::noncontrolling_interest: return bs.noncontrolling_interest;
        case Item::common_equity: return bs.common_equity;
        case Item::dividends: return bs.dividends_paid;
    }
    return std::nullopt;
}

std::optional<double> add(const std::optional<double>& a, const std::optional<double>& b) {
    if (!a && !b) return std::nullopt;
    return a.value_or(0.0) + b.value_or(0.0);
}

}  // namespace

BalanceSheet operator+(const BalanceSheet& a, const BalanceSheet& b) {
    BalanceSheet out;
    out.inventories = a.inventories + b.inventories;
    out.trade_receivables = a.trade_receivables + b.trade_receivables;
    out.current_tax_receivable = a.current_tax_receivable + b.current_tax_receivable;
    out.trade_payables = a.trade_payables + b.trade_payables;
    out.current_tax_liabilities = a.current_tax_liabilities + b.current_tax_liabilities;
    out.ppe_and_intangibles = a.ppe_and_intangibles + b.ppe_and_intangibles;
    out.other_net_operating_assets = a.other_net_operating_assets + b.other_net_operating_assets;
    out.net_financial_liabilities = a.net_financial_liabilities + b.net_financial_liabilities;
    out.noncontrolling_interest = a.noncontrolling_interest + b.noncontrolling_interest;
    out.common_equity = add(a.common_equity, b.common_equity);
    out.dividends_paid = add(a.dividends_paid, b.dividends_paid);
    return out;
}

std::string_view item_name(Item item) {
    return kNames[static_cast<std::size_t>(item)];
}

std::optional<Item> parse_item(std::string_view name) {
    const auto it = std::find(kNames.begin(), kNames.end(), name);
    if (it == kNames.end()) return std::nullopt;
    return kItems[static_cast<std::size_t>(it - kNames.begin())];
}

std::span<const Item> all_items() {
    return kItems;
}

bool is_required(Item item) {
    switch (item) {
        case Item::ebit:
        case Item::comprehensive_earnings:
        case Item::common_equity:
        case Item::dividends:
            return false;
        default:
            return true;
    }
}

StatementSet StatementSet::from_periods(std::vector<PeriodStatements> periods) {
    if (periods.empty()) throw InputError("no periods");
    std::sort(periods.begin(), periods.end(),
              [](const auto& a, const auto& b) { return a.period.index < b.period.index; });
    int bases = 0;
    for (std::size_t i = 0; i < periods.size(); ++i) {
        if (periods[i].period.index == 0) ++bases;
        if (i > 0 && periods[i].period.index != periods[i - 1].period.index + 1) {
            throw InputError("periods are not contiguous: '" + periods[i - 1].period.label + "' then '" +
                             periods[i].period.label + "'");
        }
    }
    if (bases != 1) throw InputError("statement set needs exactly one base (index 0) period");
    StatementSet set;
    set.periods_ = std::move(periods);
    return set;
}

const PeriodStatements& StatementSet::base() const {
    return at(0);
}

const PeriodStatements& StatementSet::at(int index) const {
    const int offset = index - periods_.front().period.index;
    if (offset < 0 || offset >= static_cast<int>(periods_.size())) {
        throw InputError("no period with index " + std::to_string(index));
    }
    return periods_[static_cast<std::size_t>(offset)];
}

StatementSet parse_statements(std::string_view input) {
    const auto rows = text::lines(input);

    struct Pending {
        std::string label;
        YearLabel year;
        PeriodStatements statements;
        std::array<bool, kItemCount> seen{};
    };
    std::map<int, Pending> by_year;

    bool header_seen = false;
    for (std::size_t n = 0; n < rows.size(); ++n) {
        const auto line_no = std::to_string(n + 1);
        const auto line = text::trim(rows[n]);
        if (line.empty() || line.starts_with('#')) continue;

        const auto fields = text::split(line, ',');
        if (!header_seen) {
            if (fields.size() != 3 || text::trim(fields[0]) != "period" || text::trim(fields[1]) != "item" ||
                text::trim(fields[2]) != "value") {
                throw InputError("line " + line_no + ": expected header 'period,item,value'");
            }
            header_seen = true;
            continue;
        }
        if (fields.size() != 3) {
            throw InputError("line " + line_no + ": expected 3 fields, got " + std::to_string(fields.size()));
        }
        const auto label = text::trim(fields[0]);
        const auto year = parse_label(label);
        if (!year) throw InputError("line " + line_no + ": bad period label '" + std::string(label) + "'");
        const auto item_text = text::trim(fields[1]);
        const auto item = parse_item(item_text);
        if (!item) throw InputError("line " + line_no + ": unknown item '" + std::string(item_text) + "'");
        const auto value = text::parse_double(fields[2]);
        if (!value) {
            throw InputError("line " + line_no + ": non-numeric value '" + std::string(text::trim(fields[2])) + "'");
        }
        if ((*item == Item::trade_payables || *item == Item::current_tax_liabilities) && *value > 0.0) {
            throw InputError("line " + line_no + ": " + std::string(item_text) + " must be entered as a negative amount");
        }

        auto [it, inserted] = by_year.try_emplace(year->year);
        auto& pending = it->second;
        if (inserted) {
            pending.label = std::string(label);
            pending.year = *year;
        } else if (pending.label != label) {
            throw InputError("line " + line_no + ": period '" + std::string(label) + "' conflicts with '" +
                             pending.label + "'");
        }
        auto& seen = pending.seen[static_cast<std::size_t>(*item)];
        if (seen) {
            throw InputError("line " + line_no + ": duplicate entry for (" + std::string(label) + ", " +
                             std::string(item_text) + ")");
        }
        seen = true;
        assign(pending.statements, *item, *value);
    }

    if (by_year.empty()) throw InputError("no periods");

    std::optional<int> base_year;
    for (const auto& [y, p] : by_year) {
        if (!p.year.estimate) base_year = y;
    }
    if (!base_year) throw InputError("no actual (non-estimate) period to serve as base year");

    std::vector<PeriodStatements> periods;
    for (auto& [y, p] : by_year) {
        if (p.year.estimate && y < *base_year) {
            throw InputError("estimate period '" + p.label + "' precedes the base year");
        }
        for (const auto item : kItems) {
            if (is_required(item) && !p.seen[static_cast<std::size_t>(item)]) {
                throw InputError("period '" + p.label + "': missing required item '" +
                                 std::string(item_name(item)) + "'");
            }
        }
        p.statements.period = PeriodId{p.label, y - *base_year};
        periods.push_back(std::move(p.statements));
    }
    return StatementSet::from_periods(std::move(periods));
}

std::string serialize_statements(const StatementSet& set) {
    std::ostringstream out;
    out << "period,item,value\n";
    for (const auto& p : set.periods()) {
        for (const auto item : kItems) {
            if (const auto v = lookup(p, item)) {
                out << p.period.label << ',' << item_name(item) << ',' << text::shortest(*v) << '\n';
            }
        }
    }
    return out.str();
}

std::vector<double> statement_values(const StatementSet& set) {
    std::vector<double> out;
    for (const auto& p : set.periods()) {
        for (const auto item : kItems) {
            if (const auto v = lookup(p, item)) out.push_back(*v);
        }
    }
    return out;
}

double working_capital(const BalanceSheet& bs) {
    return bs.inventories + bs.trade_receivables + bs.current_tax_receivable + bs.trade_payables +
           bs.current_tax_liabilities;
}

double net_operating_assets(const BalanceSheet& bs) {
    return working_capital(bs) + bs.ppe_and_intangibles + bs.other_net_operating_assets;
}

CleanSurplusCheck check_clean_surplus(double b_prev, double earn, double div, double b_cur, double tolerance) {
    const double residual = b_prev + earn - div - b_cur;
    return {std::abs(residual) <= tolerance, residual};
}

}  // namespace accval
