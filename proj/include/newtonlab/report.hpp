#pragma once

#include <string>
#include <vector>

namespace newtonlab {

enum class ReportFormat { KeyValue, Tsv };

// Line-oriented table with a fixed column order. Key-value output is a
// "# <verb>" header followed by one "col=value ..." line per row; TSV output
// is a column header followed by tab-separated rows. Trailing notes are
// emitted as "# ..." lines in both formats.
struct Report {
  std::string verb;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;

  void add_row(std::vector<std::string> row);
  std::string emit(ReportFormat format) const;
};

std::string bool_str(bool b);

}  // namespace newtonlab
