#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace accval {

enum class Classification { match, rounding, errata };

std::string_view classification_name(Classification c);

/// match: within half a unit of the printed precision; rounding: within five
/// units (explained by 2-dp intermediate rounding); errata: anything larger.
Classification classify(double printed, int decimals, double recomputed);

struct ReconciliationRow {
    std::string table;     // "Table 1", "Table 2", "Table 3", "Text"
    std::string location;  // block / row / column
    double printed = 0.0;
    int decimals = 2;
    double recomputed = 0.0;
    double abs_deviation = 0.0;  // printed - recomputed
    double rel_deviation = 0.0;  // abs_deviation / |recomputed|
    Classification classification = Classification::match;
};

struct ReconciliationReport {
    std::vector<ReconciliationRow> rows;

    std::size_t count(Classification c) const;
    const ReconciliationRow* find(std::string_view table, std::string_view location) const;
};

/// Recomputes every derivable figure of the Marks & Spencer tables with the
/// engine and classifies the printed value. Schedule rows (discount factors,
/// per-period PVs and their totals) use the printed 2-dp factors; headline
/// continuing values and entity values use exact discounting.
ReconciliationReport reconcile_ms();

}  // namespace accval
