#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "accval/benford.hpp"
#include "accval/cli.hpp"
#include "accval/errors.hpp"
#include "accval/fixtures.hpp"
#include "accval/statements.hpp"
#include "accval/text.hpp"
#include "reports.hpp"

namespace accval::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Inputs {
    FlowSeries series;
    Assumptions assumptions;
    std::optional<StatementSet> statements;
};

Inputs load_valuation_inputs(const RunConfig& cfg) {
    Inputs in;
    if (cfg.fixture == "ms") {
        in.series = fixtures::ms_flow_series();
        in.assumptions = fixtures::ms_assumptions();
        return in;
    }
    if (!cfg.fixture.empty()) throw InputError("unknown fixture '" + cfg.fixture + "'");
    if (cfg.statements_path.empty() || cfg.assumptions_path.empty()) {
        throw InputError("need --statements and --assumptions, or --fixture ms");
    }
    in.statements = parse_statements(read_file(cfg.statements_path));
    in.assumptions = parse_assumptions(read_file(cfg.assumptions_path));
    in.series = project_flows(*in.statements, in.assumptions);
    return in;
}

std::vector<double> default_axis(double centre) {
    return {centre - 0.01, centre, centre + 0.01};
}

struct Options {
    RunConfig cfg;
    std::string format_name;
    std::string perspective = "entity";
    std::string model = "fcfvm";
    std::vector<double> wacc_values;
    std::vector<double> growth_values;
    std::vector<std::string> drivers{"ebit", "sales"};
    std::vector<std::string> methods{"median", "harmonic_mean"};
    std::vector<std::string> supplied;
    std::optional<double> shares;
    bool recompute = false;
    std::string column;
    BenfordThresholds thresholds;
    std::string lim_model = "ohlson";
    double omega0 = 0.0, omega1 = 0.0, gamma1 = 0.0, rho = 1.1, growth_factor = 1.0;
    double book = 0.0, residual = 0.0, other_info = 0.0, noa = 0.0, nfa = 0.0;
    std::optional<double> earnings, dividends;
};

Report cmd_value(const Options& o, std::ostream& err) {
    const auto in = load_valuation_inputs(o.cfg);
    ValuationOptions opts;
    opts.printed_factors = o.cfg.printed_factors;
    std::vector<ValuationResult> results;
    if (o.perspective == "equity") {
        opts.perspective = Perspective::equity;
        results.push_back(value_revm(in.series, in.assumptions, opts));
        results.push_back(value_aegm(in.series, in.assumptions, opts));
    } else if (o.perspective == "entity") {
        for (const auto m : {Model::fcfvm, Model::revm, Model::aegm}) {
            results.push_back(value_model(m, in.series, in.assumptions, opts));
        }
    } else {
        throw InputError("unknown perspective '" + o.perspective + "'");
    }
    for (const auto& r : results) {
        for (const auto& w : r.warnings) err << "warning: " << model_name(r.model) << ": " << w << '\n';
    }
    std::optional<BenfordReport> screen;
    if (in.statements) screen = benford_screen(statement_values(*in.statements));
    return valuation_report(results, in.assumptions, screen ? &*screen : nullptr);
}

Report cmd_sensitivity(const Options& o) {
    if (o.cfg.fixture == "table2") {
        const auto& t = fixtures::table2();
        std::vector<ScenarioComponents> cells;
        for (const auto& c : t.columns) cells.push_back({c.axis, c.wacc, c.growth, c.pv_explicit, c.pv_of_cv});
        return sensitivity_report(grid_from_components(cells[t.baseline_column], cells, t.claims));
    }
    const auto model = parse_model(o.model);
    if (!model) throw InputError("unknown model '" + o.model + "'");
    const auto in = load_valuation_inputs(o.cfg);
    const auto wacc = o.wacc_values.empty() ? default_axis(in.assumptions.wacc) : o.wacc_values;
    const auto growth = o.growth_values.empty() ? default_axis(in.assumptions.sales_growth) : o.growth_values;
    return sensitivity_report(
        sensitivity_grid(in.series, in.assumptions, wacc, growth, *model, {o.cfg.cross, o.cfg.printed_factors}));
}

std::map<std::pair<Driver, CentralTendency>, double> parse_supplied(const std::vector<std::string>& specs) {
    std::map<std::pair<Driver, CentralTendency>, double> out;
    for (const auto& spec : specs) {
        const auto colon = spec.find(':');
        const auto eq = spec.find('=');
        if (colon == std::string::npos || eq == std::string::npos || eq < colon) {
            throw InputError("--multiple expects driver:method=value, got '" + spec + "'");
        }
        const auto d = parse_driver(spec.substr(0, colon));
        const auto m = parse_tendency(spec.substr(colon + 1, eq - colon - 1));
        const auto v = text::parse_double(spec.substr(eq + 1));
        if (!d || !m || !v) throw InputError("bad --multiple '" + spec + "'");
        out[{*d, *m}] = *v;
    }
    return out;
}

Report cmd_multiples(const Options& o) {
    CompsRequest request;
    std::vector<Comparable> comps;
    if (o.cfg.fixture == "table3") {
        request = fixtures::table3_request(!o.recompute);
        comps = fixtures::table3_comparables();
    } else {
        if (!o.cfg.fixture.empty()) throw InputError("unknown fixture '" + o.cfg.fixture + "'");
        if (o.cfg.statements_path.empty() || o.cfg.comparables_path.empty()) {
            throw InputError("need --statements and --comparables, or --fixture table3");
        }
        const auto set = parse_statements(read_file(o.cfg.statements_path));
        comps = parse_comparables(read_file(o.cfg.comparables_path));
        const auto& base = set.base();
        request.target[Driver::sales] = base.income.sales;
        if (base.income.ebit) request.target[Driver::ebit] = *base.income.ebit;
        if (base.balance.common_equity) request.target[Driver::book_value] = *base.balance.common_equity;
        if (base.income.comprehensive_earnings) request.target[Driver::earnings] = *base.income.comprehensive_earnings;
        request.net_financial_liabilities = base.balance.net_financial_liabilities;
        request.noncontrolling_interest = base.balance.noncontrolling_interest;
        if (!o.cfg.assumptions_path.empty()) {
            request.shares = parse_assumptions(read_file(o.cfg.assumptions_path)).shares_outstanding;
        }
        request.drivers.clear();
        for (const auto& name : o.drivers) {
            const auto d = parse_driver(name);
            if (!d) throw InputError("unknown driver '" + name + "'");
            request.drivers.push_back(*d);
        }
        request.methods.clear();
        for (const auto& name : o.methods) {
            const auto m = parse_tendency(name);
            if (!m) throw InputError("unknown method '" + name + "'");
            request.methods.push_back(*m);
        }
    }
    for (const auto& [key, value] : parse_supplied(o.supplied)) request.supplied[key] = value;
    if (o.shares) request.shares = *o.shares;
    return comps_report(run_comps(request, comps));
}

std::vector<double> numeric_cells(std::string_view csv, const std::string& column) {
    std::vector<double> values;
    const auto rows = text::lines(csv);
    std::optional<std::size_t> index;
    bool header_done = column.empty();
    for (const auto raw : rows) {
        const auto line = text::trim(raw);
        if (line.empty() || line.starts_with('#')) continue;
        const auto fields = text::split(line, ',');
        if (!header_done) {
            for (std::size_t i = 0; i < fields.size(); ++i) {
                if (text::trim(fields[i]) == column) index = i;
            }
            if (!index) throw InputError("no column named '" + column + "'");
            header_done = true;
            continue;
        }
        if (index) {
            if (*index < fields.size()) {
                if (const auto v = text::parse_double(fields[*index])) values.push_back(*v);
            }
            continue;
        }
        for (const auto f : fields) {
            if (const auto v = text::parse_double(f)) values.push_back(*v);
        }
    }
    return values;
}

Report cmd_benford(const Options& o) {
    std::vector<double> values;
    if (!o.cfg.input_path.empty()) {
        values = numeric_cells(read_file(o.cfg.input_path), o.column);
    } else if (!o.cfg.statements_path.empty()) {
        values = statement_values(parse_statements(read_file(o.cfg.statements_path)));
    } else if (o.cfg.fixture == "ms") {
        values = statement_values(parse_statements(fixtures::ms_statements_csv()));
    } else {
        throw InputError("need --input, --statements or --fixture ms");
    }
    if (o.thresholds.min_sample < 0) throw InputError("--min-sample must be non-negative");
    return benford_report(benford_screen(values, o.thresholds));
}

Report cmd_lim(const Options& o) {
    if (o.lim_model == "ohlson") {
        const OhlsonParams p{o.omega1, o.gamma1, o.rho};
        std::optional<std::pair<double, double>> ed;
        if (o.earnings && o.dividends) ed = std::make_pair(*o.earnings, *o.dividends);
        return ohlson_report(p, o.book, o.residual, o.other_info, ed);
    }
    if (o.lim_model == "feltham-ohlson") {
        const FelthamOhlsonParams p{o.omega0, o.omega1, o.gamma1, o.growth_factor, o.rho};
        return fo_report(p, o.noa, o.residual, o.other_info, o.nfa);
    }
    throw InputError("unknown LIM model '" + o.lim_model + "'");
}

Report cmd_reconcile(const Options& o) {
    if (!o.cfg.fixture.empty() && o.cfg.fixture != "ms") throw InputError("unknown fixture '" + o.cfg.fixture + "'");
    return reconciliation_report(reconcile_ms());
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Accounting-based equity valuation engine", "accval"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format_name, "Output format: table, csv or json (default $ACCVAL_FORMAT or table)");

    auto* value = app.add_subcommand("value", "Value with FCFVM, REVM and AEGM and bridge to equity");
    auto* sens = app.add_subcommand("sensitivity", "WACC x growth sensitivity grid");
    auto* mult = app.add_subcommand("multiples", "Comparable-company multiples valuation");
    auto* benf = app.add_subcommand("benford", "First-digit reliability screen");
    auto* lim = app.add_subcommand("lim", "Ohlson / Feltham-Ohlson closed-form values");
    auto* reco = app.add_subcommand("reconcile", "Reconcile printed case figures against the engine");

    for (auto* sub : {value, sens, mult}) {
        sub->add_option("--statements", o.cfg.statements_path, "Statements CSV (period,item,value)")
            ->check(CLI::ExistingFile);
        sub->add_option("--assumptions", o.cfg.assumptions_path, "Assumptions file (key=value)")
            ->check(CLI::ExistingFile);
    }
    value->add_option("--fixture", o.cfg.fixture, "Embedded case data: ms");
    value->add_flag("--printed-factors", o.cfg.printed_factors, "Discount with 2-dp rounded factors");
    value->add_option("--perspective", o.perspective, "entity or equity");

    sens->add_option("--fixture", o.cfg.fixture, "Embedded case data: ms or table2");
    sens->add_option("--wacc", o.wacc_values, "Comma-separated WACC values")->delimiter(',');
    sens->add_option("--growth", o.growth_values, "Comma-separated growth values")->delimiter(',');
    sens->add_flag("--cross", o.cfg.cross, "Full WACC x growth product");
    sens->add_option("--model", o.model, "fcfvm, revm or aegm");
    sens->add_flag("--printed-factors", o.cfg.printed_factors, "Discount with 2-dp rounded factors");

    mult->add_option("--fixture", o.cfg.fixture, "Embedded case data: table3");
    mult->add_option("--comparables", o.cfg.comparables_path, "Comparables CSV")->check(CLI::ExistingFile);
    mult->add_option("--drivers", o.drivers, "Comma-separated drivers")->delimiter(',');
    mult->add_option("--methods", o.methods, "Comma-separated central tendencies")->delimiter(',');
    mult->add_option("--multiple", o.supplied, "Supplied multiple, driver:method=value (repeatable)");
    mult->add_option("--shares", o.shares, "Shares outstanding (millions)");
    mult->add_flag("--recompute", o.recompute, "With --fixture table3: use recomputed instead of printed multiples");

    benf->add_option("--input", o.cfg.input_path, "CSV file; every numeric cell is screened")->check(CLI::ExistingFile);
    benf->add_option("--column", o.column, "Screen only this column of --input");
    benf->add_option("--statements", o.cfg.statements_path, "Screen all values of a statements file")
        ->check(CLI::ExistingFile);
    benf->add_option("--fixture", o.cfg.fixture, "Embedded case data: ms");
    benf->add_option("--min-sample", o.thresholds.min_sample, "Minimum sample size (default 50)");
    benf->add_option("--chi2-critical", o.thresholds.chi_square_critical, "Chi-square critical value (default 15.507)");
    benf->add_option("--mad-limit", o.thresholds.mad_limit, "Mean absolute deviation limit (default 0.015)");

    lim->add_option("--model", o.lim_model, "ohlson or feltham-ohlson");
    lim->add_option("--omega0", o.omega0, "Conservatism loading (Feltham-Ohlson)");
    lim->add_option("--omega1", o.omega1, "Residual income persistence");
    lim->add_option("--gamma1", o.gamma1, "Other-information persistence");
    lim->add_option("--rho", o.rho, "Gross cost of capital, e.g. 1.10");
    lim->add_option("--growth-factor", o.growth_factor, "Gross NOA growth factor (Feltham-Ohlson)");
    lim->add_option("--book", o.book, "Book value (Ohlson)");
    lim->add_option("--residual", o.residual, "Current residual (operating) income");
    lim->add_option("--other-info", o.other_info, "Other information v");
    lim->add_option("--earnings", o.earnings, "Current earnings (Ohlson weighted form)");
    lim->add_option("--dividends", o.dividends, "Current dividends (Ohlson weighted form)");
    lim->add_option("--noa", o.noa, "Net operating assets (Feltham-Ohlson)");
    lim->add_option("--nfa", o.nfa, "Net financial assets (Feltham-Ohlson)");

    reco->add_option("--fixture", o.cfg.fixture, "Embedded case data: ms (default)");

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 1;
    }

    if (o.format_name.empty()) {
        if (const char* env = std::getenv("ACCVAL_FORMAT")) o.format_name = env;
    }
    if (!o.format_name.empty()) {
        const auto f = parse_format(o.format_name);
        if (!f) {
            err << "error: unknown format '" << o.format_name << "'\n";
            return 1;
        }
        o.cfg.format = *f;
    }
    o.cfg.command = app.get_subcommands().front()->get_name();

    try {
        Report report;
        if (o.cfg.command == "value") report = cmd_value(o, err);
        else if (o.cfg.command == "sensitivity") report = cmd_sensitivity(o);
        else if (o.cfg.command == "multiples") report = cmd_multiples(o);
        else if (o.cfg.command == "benford") report = cmd_benford(o);
        else if (o.cfg.command == "lim") report = cmd_lim(o);
        else report = cmd_reconcile(o);
        out << render(report, o.cfg.format);
        return 0;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace accval::cli
