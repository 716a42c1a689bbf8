#pragma once

#include <json.hpp>

#include "cellscope/cells.hpp"
#include "cellscope/classify.hpp"
#include "cellscope/tableau.hpp"

namespace cellscope {

using Json = nlohmann::ordered_json;

/// {"lambda":[...], "mu":[...], "m":0, "entries":[[row,col,value],...]},
/// entries sorted by (row, col).
Json tableau_to_json(const SkewTableau& t);
/// Inverse of tableau_to_json; "m" defaults to 0 and entries may come in any
/// order.
SkewTableau tableau_from_json(const Json& j);

/// One object per cell: cell_id, size, q_symbol, members (lexicographic).
Json cell_to_json(const CellPartition& cp, std::size_t k);

Json record_to_json(const VerificationRecord& r);
/// Summary of a report (counts, mismatches, verdict), without the records.
Json report_summary_json(const VerificationReport& r);
Json interval_summary_json(const IntervalClassification& c);
Json a5_to_json(const A5Report& r);

}  // namespace cellscope
