#include "gtrunc/report.hpp"

#include <sstream>
#include <stdexcept>

namespace gtrunc {

ReportFormat parse_format(const std::string& name) {
  if (name == "tsv") return ReportFormat::Tsv;
  if (name == "json") return ReportFormat::Json;
  throw std::invalid_argument("unknown format '" + name + "' (expected tsv or json)");
}

namespace {

std::string tsv_value(const nlohmann::ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

}  // namespace

std::string emit_report(const std::vector<std::string>& columns,
                        const std::vector<nlohmann::ordered_json>& rows, ReportFormat format) {
  if (format == ReportFormat::Json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      nlohmann::ordered_json obj;
      for (const auto& col : columns) obj[col] = row.at(col);
      arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
  }
  std::ostringstream out;
  for (size_t i = 0; i < columns.size(); ++i) out << (i ? "\t" : "") << columns[i];
  out << '\n';
  for (const auto& row : rows) {
    for (size_t i = 0; i < columns.size(); ++i) out << (i ? "\t" : "") << tsv_value(row.at(columns[i]));
    out << '\n';
  }
  return out.str();
}

}  // namespace gtrunc
