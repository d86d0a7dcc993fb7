#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace gtrunc {

enum class ReportFormat { Tsv, Json };

ReportFormat parse_format(const std::string& name);  // "tsv" | "json"

// Rows must be flat objects sharing the column set. TSV prints the header
// first; JSON prints an array of objects with the same field order.
std::string emit_report(const std::vector<std::string>& columns,
                        const std::vector<nlohmann::ordered_json>& rows, ReportFormat format);

}  // namespace gtrunc
