#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace accval::cli {

enum class Format { table, csv, json };

std::optional<Format> parse_format(std::string_view name);

/// How a value is displayed in table output. csv/json always carry the full
/// precision number.
enum class Kind { text, money, rate, percent_points, number, integer };

struct Cell {
    Kind kind = Kind::text;
    std::string text;
    double number = 0.0;

    static Cell str(std::string s) { return {Kind::text, std::move(s), 0.0}; }
    static Cell money(double v) { return {Kind::money, {}, v}; }
    static Cell rate(double v) { return {Kind::rate, {}, v}; }
    static Cell points(double v) { return {Kind::percent_points, {}, v}; }
    static Cell num(double v) { return {Kind::number, {}, v}; }
    static Cell integer(long v) { return {Kind::integer, {}, static_cast<double>(v)}; }
};

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

struct Report {
    std::string title;
    std::vector<std::pair<std::string, Cell>> summary;
    std::vector<Table> tables;
};

/// Deterministic rendering. Table output rounds money to 2 dp and rates to
/// 2-dp percent; csv and json carry full precision.
std::string render(const Report& report, Format format);

/// Parsed command line.
struct RunConfig {
    std::string command;
    std::string statements_path;
    std::string assumptions_path;
    std::string comparables_path;
    std::string input_path;
    std::string fixture;
    Format format = Format::table;
    bool printed_factors = false;
    bool cross = false;
};

/// Entry point behind the accval binary. Exit codes: 0 success, 1 input
/// error or bad usage, 2 numerical-domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace accval::cli
