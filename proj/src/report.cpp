#include "newtonlab/report.hpp"

#include "newtonlab/error.hpp"

namespace newtonlab {

void Report::add_row(std::vector<std::string> row) {
  if (row.size() != columns.size()) {
    fail(ErrorCode::DomainError, "report row has " + std::to_string(row.size()) + " fields, expected " +
                                     std::to_string(columns.size()));
  }
  rows.push_back(std::move(row));
}

std::string Report::emit(ReportFormat format) const {
  std::string out;
  const char sep = format == ReportFormat::Tsv ? '\t' : ' ';
  if (format == ReportFormat::Tsv) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c) out += sep;
      out += columns[c];
    }
    out += '\n';
  } else {
    out += "# " + verb + "\n";
  }
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += sep;
      if (format == ReportFormat::KeyValue) out += columns[c] + "=";
      out += row[c];
    }
    out += '\n';
  }
  for (const auto& note : notes) out += "# " + note + "\n";
  return out;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace newtonlab
