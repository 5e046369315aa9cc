#pragma once

#include <string>
#include <vector>

#include "avgsearch/analysis.hpp"

namespace avgsearch {

// Fixed CSV column order for ErrorReport rows.
extern const char* const report_csv_header;  // "m,d,pair_energy,..."

std::string report_csv_row(const ErrorReport& r);

// Splits a CSV line into the 8 report fields; throws ParseError on arity or
// non-numeric fields.  Used when reloading decay rows.
std::vector<std::string> split_report_csv_row(const std::string& line,
                                              const std::string& source,
                                              std::size_t line_number);

// Flat JSON object, fields named exactly like the CSV columns.
std::string report_json(const ErrorReport& r);

// Human-readable block for the analyze command.
std::string report_text(const ErrorReport& r);

} // namespace avgsearch
