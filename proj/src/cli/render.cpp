#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "accval/cli.hpp"
#include "accval/text.hpp"

#ifndef ACCVAL_VERSION
#define ACCVAL_VERSION "dev"
#endif

namespace accval::cli {

namespace {

std::string display(const Cell& c) {
    switch (c.kind) {
        case Kind::text: return c.text;
        case Kind::money: return text::fixed(c.number, 2);
        case Kind::rate: return std::isfinite(c.number) ? text::fixed(c.number * 100.0, 2) + "%" : "n/a";
        case Kind::percent_points: return std::isfinite(c.number) ? text::fixed(c.number, 2) + "%" : "n/a";
        case Kind::number: return text::fixed(c.number, 4);
        case Kind::integer: return text::fixed(c.number, 0);
    }
    return {};
}

std::string full(const Cell& c) {
    if (c.kind == Kind::text) return c.text;
    if (!std::isfinite(c.number)) return "";
    return text::shortest(c.number);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

nlohmann::ordered_json to_json(const Cell& c) {
    if (c.kind == Kind::text) return c.text;
    if (!std::isfinite(c.number)) return nullptr;
    if (c.kind == Kind::integer) return static_cast<long>(c.number);
    return c.number;
}

std::string render_table(const Report& report) {
    std::ostringstream os;
    os << "# accval " << ACCVAL_VERSION << '\n';
    if (!report.title.empty()) os << report.title << '\n';
    if (!report.summary.empty()) {
        std::size_t width = 0;
        for (const auto& [k, v] : report.summary) width = std::max(width, k.size());
        for (const auto& [k, v] : report.summary) {
            os << "  " << k << std::string(width - k.size(), ' ') << "  " << display(v) << '\n';
        }
    }
    for (const auto& t : report.tables) {
        os << '\n' << "[" << t.name << "]\n";
        std::vector<std::vector<std::string>> cells;
        std::vector<std::size_t> width(t.columns.size(), 0);
        for (std::size_t j = 0; j < t.columns.size(); ++j) width[j] = t.columns[j].size();
        for (const auto& row : t.rows) {
            auto& out = cells.emplace_back();
            for (std::size_t j = 0; j < row.size() && j < width.size(); ++j) {
                out.push_back(display(row[j]));
                width[j] = std::max(width[j], out.back().size());
            }
        }
        const auto emit = [&](const std::vector<std::string>& values, const std::vector<Cell>* kinds) {
            std::string line;
            for (std::size_t j = 0; j < values.size(); ++j) {
                const bool left = kinds == nullptr || (*kinds)[j].kind == Kind::text;
                const std::string pad(width[j] - values[j].size(), ' ');
                if (j > 0) line += "  ";
                line += left ? values[j] + pad : pad + values[j];
            }
            while (!line.empty() && line.back() == ' ') line.pop_back();
            os << line << '\n';
        };
        emit(t.columns, nullptr);
        for (std::size_t i = 0; i < cells.size(); ++i) emit(cells[i], &t.rows[i]);
    }
    return os.str();
}

std::string render_csv(const Report& report) {
    std::ostringstream os;
    bool first = true;
    if (!report.summary.empty()) {
        os << "section,key,value\n";
        for (const auto& [k, v] : report.summary) os << "summary," << csv_escape(k) << ',' << csv_escape(full(v)) << '\n';
        first = false;
    }
    for (const auto& t : report.tables) {
        if (!first) os << '\n';
        first = false;
        os << "section";
        for (const auto& c : t.columns) os << ',' << csv_escape(c);
        os << '\n';
        for (const auto& row : t.rows) {
            os << csv_escape(t.name);
            for (const auto& c : row) os << ',' << csv_escape(full(c));
            os << '\n';
        }
    }
    return os.str();
}

std::string render_json(const Report& report) {
    nlohmann::ordered_json doc;
    doc["title"] = report.title;
    auto& summary = doc["summary"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : report.summary) summary[k] = to_json(v);
    auto& tables = doc["tables"] = nlohmann::ordered_json::object();
    for (const auto& t : report.tables) {
        auto rows = nlohmann::ordered_json::array();
        for (const auto& row : t.rows) {
            nlohmann::ordered_json obj = nlohmann::ordered_json::object();
            for (std::size_t j = 0; j < row.size() && j < t.columns.size(); ++j) obj[t.columns[j]] = to_json(row[j]);
            rows.push_back(std::move(obj));
        }
        tables[t.name] = std::move(rows);
    }
    return doc.dump(2) + "\n";
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
    if (name == "table") return Format::table;
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    return std::nullopt;
}

std::string render(const Report& report, Format format) {
    switch (format) {
        case Format::table: return render_table(report);
        case Format::csv: return render_csv(report);
        case Format::json: return render_json(report);
    }
    return {};
}

}  // namespace accval::cli
