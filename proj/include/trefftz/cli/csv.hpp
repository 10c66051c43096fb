#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace trefftz::cli {

/// A CSV document: leading `#` comment lines, a header row and data rows.
struct CsvTable {
  std::vector<std::string> comments;  ///< without the leading "# "
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(const std::string& name) const;  ///< throws if missing
  double number(std::size_t row, const std::string& name) const;
};

/// %.17g, so parsing the text gives back the identical double. NaN and
/// infinities are written as nan, inf, -inf.
std::string format_double(double v);
double parse_double(const std::string& s);

/// Quotes a cell when it contains a comma, quote or newline.
std::string escape_cell(const std::string& s);

void write_csv(std::ostream& out, const CsvTable& t);
CsvTable read_csv(std::istream& in);

}  // namespace trefftz::cli
