#pragma once

#include <string>

#include "adcdse/fom.hpp"

namespace adcdse {

enum class ReportFormat { kTable, kCsv, kJson };

ReportFormat parse_report_format(const std::string& name);  // "table"|"csv"|"json"

/// Shortest round-trip decimal rendering of a double (what the JSON values
/// use as well, so CSV and JSON parse back to identical numbers).
std::string format_double(double v);

/// Renders the ranked report. top_k == 0 keeps every row. The table format
/// rounds like a datasheet (0.1 dB, 0.01 ENOB/FOM); csv and json carry full
/// precision. Output depends only on the result contents, never on how many
/// threads produced them.
std::string render_report(const ExploreResult& result, ReportFormat format,
                          std::size_t top_k = 0);

}  // namespace adcdse
