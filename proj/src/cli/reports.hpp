#pragma once

#include <vector>

#include "accval/benford.hpp"
#include "accval/cli.hpp"
#include "accval/lim.hpp"
#include "accval/multiples.hpp"
#include "accval/reconcile.hpp"
#include "accval/sensitivity.hpp"
#include "accval/valuation.hpp"

namespace accval::cli {

Report valuation_report(const std::vector<ValuationResult>& results, const Assumptions& a,
                        const BenfordReport* screen);
Report sensitivity_report(const SensitivityGrid& grid);
Report comps_report(const CompsResult& result);
Report benford_report(const BenfordReport& report);
Report ohlson_report(const OhlsonParams& p, double book, double residual, double other_info,
                     std::optional<std::pair<double, double>> earnings_dividends);
Report fo_report(const FelthamOhlsonParams& p, double noa, double residual, double other_info, double nfa);
Report reconciliation_report(const ReconciliationReport& r);

}  // namespace accval::cli
