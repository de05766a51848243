#pragma once

// Tabular output shared by the CLI subcommands. Every cell is a string, so
// integers of any size print as exact decimals.

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace likepowers::output {

enum class Format { Json, Csv, Table };

/// Throws std::invalid_argument for anything but "json", "csv" or "table".
Format parse_format(std::string_view name);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

/// JSON lines: one object per row, every value a JSON string.
void write_json(std::ostream& out, const Table& t);
/// RFC 4180 CSV with a header line and CRLF line endings.
void write_csv(std::ostream& out, const Table& t);
/// Left-aligned text columns separated by two spaces.
void write_table(std::ostream& out, const Table& t);

void write(std::ostream& out, const Table& t, Format format);

}  // namespace likepowers::output
