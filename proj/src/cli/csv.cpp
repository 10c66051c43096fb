#include "trefftz/cli/csv.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace trefftz::cli {

std::size_t CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return i;
  throw std::out_of_range("CSV has no column '" + name + "'");
}

double CsvTable::number(std::size_t row, const std::string& name) const {
  return parse_double(rows.at(row).at(column(name)));
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& s) {
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) throw std::invalid_argument("not a number: '" + s + "'");
  return v;
}

std::string escape_cell(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

namespace {

void write_row(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << escape_cell(cells[i]);
  out << '\n';
}

// Splits one logical record, which may span lines inside quotes.
bool read_record(std::istream& in, std::vector<std::string>& cells) {
  cells.clear();
  std::string cell;
  bool quoted = false, any = false;
  int c;
  while ((c = in.get()) != EOF) {
    any = true;
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          cell += '"';
          in.get();
        } else {
          quoted = false;
        }
      } else {
        cell += static_cast<char>(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.push_back(cell);
      cell.clear();
    } else if (c == '\n') {
      break;
    } else if (c != '\r') {
      cell += static_cast<char>(c);
    }
  }
  if (!any) return false;
  cells.push_back(cell);
  return true;
}

}  // namespace

void write_csv(std::ostream& out, const CsvTable& t) {
  for (const auto& c : t.comments) out << "# " << c << '\n';
  write_row(out, t.header);
  for (const auto& r : t.rows) write_row(out, r);
}

CsvTable read_csv(std::istream& in) {
  CsvTable t;
  while (in.peek() == '#') {
    std::string line;
    std::getline(in, line);
    line.erase(0, 1);
    if (!line.empty() && line[0] == ' ') line.erase(0, 1);
    t.comments.push_back(line);
  }
  std::vector<std::string> cells;
  if (!read_record(in, cells)) return t;
  t.header = cells;
  while (read_record(in, cells)) {
    if (cells.size() == 1 && cells[0].empty()) continue;
    if (cells.size() != t.header.size()) throw std::runtime_error("CSV row has the wrong number of cells");
    t.rows.push_back(cells);
  }
  return t;
}

}  // namespace trefftz::cli
