#include "likepowers/output.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace likepowers::output {

Format parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "table") return Format::Table;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

void write_json(std::ostream& out, const Table& t) {
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = i < row.size() ? row[i] : "";
    out << obj.dump() << '\n';
  }
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

void csv_line(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out << ',';
    out << csv_field(cells[i]);
  }
  out << "\r\n";
}

}  // namespace

void write_csv(std::ostream& out, const Table& t) {
  csv_line(out, t.columns);
  for (const auto& row : t.rows) csv_line(out, row);
}

void write_table(std::ostream& out, const Table& t) {
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      const std::string cell = i < cells.size() ? cells[i] : "";
      s += cell;
      if (i + 1 < t.columns.size()) s += std::string(width[i] - cell.size() + 2, ' ');
    }
    out << s << '\n';
  };
  line(t.columns);
  for (const auto& row : t.rows) line(row);
}

void write(std::ostream& out, const Table& t, Format format) {
  switch (format) {
    case Format::Json: write_json(out, t); break;
    case Format::Csv: write_csv(out, t); break;
    case Format::Table: write_table(out, t); break;
  }
}

}  // namespace likepowers::output
