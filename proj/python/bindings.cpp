#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "accval/benford.hpp"
#include "accval/cli.hpp"
#include "accval/errors.hpp"
#include "accval/fixtures.hpp"
#include "accval/forecast.hpp"
#include "accval/lim.hpp"
#include "accval/multiples.hpp"
#include "accval/reconcile.hpp"
#include "accval/sensitivity.hpp"
#include "accval/statements.hpp"
#include "accval/valuation.hpp"

namespace py = pybind11;
using namespace accval;

namespace {

Model model_arg(const std::string& name) {
    const auto m = parse_model(name);
    if (!m) throw InputError("unknown model '" + name + "'");
    return *m;
}

Perspective perspective_arg(const std::string& name) {
    if (name == "entity") return Perspective::entity;
    if (name == "equity") return Perspective::equity;
    throw InputError("unknown perspective '" + name + "'");
}

py::tuple run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Accounting-based valuation engine";

    static py::exception<InputError> input_error(m, "InputError", PyExc_ValueError);
    static py::exception<DomainError> domain_error(m, "DomainError", PyExc_ArithmeticError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const InputError& e) {
            PyErr_SetString(input_error.ptr(), e.what());
        } catch (const DomainError& e) {
            PyErr_SetString(domain_error.ptr(), e.what());
        }
    });

    py::class_<Assumptions>(m, "Assumptions")
        .def(py::init<>())
        .def_readwrite("sales_growth", &Assumptions::sales_growth)
        .def_readwrite("wacc", &Assumptions::wacc)
        .def_readwrite("equity_cost", &Assumptions::equity_cost)
        .def_readwrite("horizon", &Assumptions::horizon)
        .def_readwrite("tax_rate", &Assumptions::tax_rate)
        .def_readwrite("profit_margin", &Assumptions::profit_margin)
        .def_readwrite("shares_outstanding", &Assumptions::shares_outstanding)
        .def_readwrite("oi_anchor", &Assumptions::oi_anchor)
        .def_readwrite("noa_anchor", &Assumptions::noa_anchor);

    py::class_<FlowSeries>(m, "FlowSeries")
        .def(py::init<>())
        .def_readwrite("labels", &FlowSeries::labels)
        .def_readwrite("sales", &FlowSeries::sales)
        .def_readwrite("operating_income", &FlowSeries::operating_income)
        .def_readwrite("net_operating_assets", &FlowSeries::net_operating_assets)
        .def_readwrite("comprehensive_earnings", &FlowSeries::comprehensive_earnings)
        .def_readwrite("book_value", &FlowSeries::book_value)
        .def_readwrite("dividends", &FlowSeries::dividends)
        .def_readwrite("net_financial_liabilities", &FlowSeries::net_financial_liabilities)
        .def_readwrite("noncontrolling_interest", &FlowSeries::noncontrolling_interest)
        .def_property_readonly("horizon", &FlowSeries::horizon);

    py::class_<ScheduleRow>(m, "ScheduleRow")
        .def_readonly("label", &ScheduleRow::label)
        .def_readonly("t", &ScheduleRow::t)
        .def_readonly("flow", &ScheduleRow::flow)
        .def_readonly("factor", &ScheduleRow::factor)
        .def_readonly("present_value", &ScheduleRow::present_value);

    py::class_<ValuationResult>(m, "ValuationResult")
        .def_property_readonly("model", [](const ValuationResult& r) { return std::string(model_name(r.model)); })
        .def_readonly("rate", &ValuationResult::rate)
        .def_readonly("growth", &ValuationResult::growth)
        .def_readonly("anchor", &ValuationResult::anchor)
        .def_readonly("pv_explicit", &ValuationResult::pv_explicit)
        .def_readonly("continuing_value", &ValuationResult::continuing_value)
        .def_readonly("pv_of_cv", &ValuationResult::pv_of_cv)
        .def_readonly("entity_value", &ValuationResult::entity_value)
        .def_readonly("equity_value", &ValuationResult::equity_value)
        .def_readonly("per_share", &ValuationResult::per_share)
        .def_readonly("schedule", &ValuationResult::schedule)
        .def_readonly("warnings", &ValuationResult::warnings);

    m.def("parse_assumptions", [](const std::string& text) { return parse_assumptions(text); }, py::arg("text"));
    m.def(
        "project_flows",
        [](const std::string& statements_csv, const Assumptions& a) {
            return project_flows(parse_statements(statements_csv), a);
        },
        py::arg("statements_csv"), py::arg("assumptions"),
        "Forecast flows from a period,item,value statements CSV.");
    m.def(
        "value",
        [](const std::string& model, const FlowSeries& s, const Assumptions& a, const std::string& perspective,
           bool printed_factors) {
            ValuationOptions opts;
            opts.perspective = perspective_arg(perspective);
            opts.printed_factors = printed_factors;
            return value_model(model_arg(model), s, a, opts);
        },
        py::arg("model"), py::arg("series"), py::arg("assumptions"), py::arg("perspective") = "entity",
        py::arg("printed_factors") = false);
    m.def("continuing_value", &continuing_value, py::arg("flow_terminal"), py::arg("g"), py::arg("r"));
    m.def("free_cash_flows", &free_cash_flows, py::arg("series"));
    m.def("residual_operating_incomes", &residual_operating_incomes, py::arg("series"), py::arg("wacc"));

    m.def(
        "sensitivity",
        [](const FlowSeries& s, const Assumptions& a, const std::vector<double>& wacc,
           const std::vector<double>& growth, const std::string& model, bool cross) {
            const auto grid = sensitivity_grid(s, a, wacc, growth, model_arg(model), {cross, false});
            py::list cells;
            for (const auto& c : grid.cells) {
                py::dict d;
                d["wacc"] = c.wacc;
                d["growth"] = c.growth;
                d["valid"] = c.valid;
                d["entity_value"] = c.entity_value;
                d["equity_value"] = c.equity_value;
                d["pct_change_env"] = c.pct_change_env;
                d["pct_change_eqv"] = c.pct_change_eqv;
                cells.append(d);
            }
            return py::make_tuple(grid.baseline_entity_value, cells, is_monotone(grid));
        },
        py::arg("series"), py::arg("assumptions"), py::arg("wacc"), py::arg("growth"), py::arg("model") = "fcfvm",
        py::arg("cross") = false, "Returns (baseline entity value, list of cells, monotone).");

    m.def(
        "central_multiple",
        [](std::vector<double> values, const std::string& method) {
            const auto t = parse_tendency(method);
            if (!t) throw InputError("unknown method '" + method + "'");
            return central_multiple(values, *t);
        },
        py::arg("values"), py::arg("method"));

    m.def("benford_pmf", &benford_pmf, py::arg("digit"));
    m.def(
        "benford_screen",
        [](const std::vector<double>& values, long min_sample, double chi2_critical, double mad_limit) {
            const auto r = benford_screen(values, {min_sample, chi2_critical, mad_limit});
            py::dict d;
            d["verdict"] = std::string(verdict_name(r.verdict));
            d["sample"] = r.histogram.total;
            d["chi_square"] = r.chi_square;
            d["mad"] = r.mad;
            d["counts"] = r.histogram.counts;
            return d;
        },
        py::arg("values"), py::arg("min_sample") = 50, py::arg("chi2_critical") = 15.507,
        py::arg("mad_limit") = 0.015);

    m.def(
        "ohlson_value",
        [](double book, double residual, double other_info, double omega1, double gamma1, double rho) {
            return ohlson_value(book, residual, other_info, {omega1, gamma1, rho});
        },
        py::arg("book"), py::arg("residual_earnings"), py::arg("other_info"), py::arg("omega1"), py::arg("gamma1"),
        py::arg("rho"));
    m.def(
        "fo_value",
        [](double noa, double residual, double other_info, double nfa, double omega0, double omega1, double gamma1,
           double growth_factor, double rho) {
            const auto v = fo_value(noa, residual, other_info, nfa, {omega0, omega1, gamma1, growth_factor, rho});
            return py::make_tuple(v.operations_value, v.total_value);
        },
        py::arg("noa"), py::arg("residual"), py::arg("other_info"), py::arg("nfa"), py::arg("omega0"),
        py::arg("omega1"), py::arg("gamma1"), py::arg("growth_factor"), py::arg("rho"));

    m.def("ms_flow_series", &fixtures::ms_flow_series);
    m.def("ms_assumptions", &fixtures::ms_assumptions);
    m.def("ms_statements_csv", [] { return std::string(fixtures::ms_statements_csv()); });
    m.def(
        "reconcile",
        [] {
            py::list rows;
            for (const auto& r : reconcile_ms().rows) {
                py::dict d;
                d["table"] = r.table;
                d["location"] = r.location;
                d["printed"] = r.printed;
                d["recomputed"] = r.recomputed;
                d["classification"] = std::string(classification_name(r.classification));
                rows.append(d);
            }
            return rows;
        },
        "Printed case figures against recomputed values.");
    m.def("run_cli", &run_cli, py::arg("args"), "Runs the command line front end; returns (exit code, stdout, stderr).");

    m.attr("__version__") = ACCVAL_VERSION;
}
