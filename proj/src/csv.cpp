#include "fermitrap/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "fermitrap/errors.hpp"

namespace fermitrap {

void Table::add_row(std::vector<std::optional<double>> row) {
  if (row.size() != columns.size())
    throw std::invalid_argument("Table: row width " + std::to_string(row.size()) +
                                " does not match " + std::to_string(columns.size()) +
                                " columns");
  rows.push_back(std::move(row));
}

void emit_csv(const Table& table, std::ostream& out) {
  if (table.rows.empty()) throw std::invalid_argument("emit_csv: empty table");
  for (std::size_t i = 0; i < table.columns.size(); ++i)
    out << (i ? "," : "") << table.columns[i];
  out << '\n';
  char buf[32];
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      if (row[i]) {
        std::snprintf(buf, sizeof buf, "%.17g", *row[i]);
        out << buf;
      }
    }
    out << '\n';
  }
}

void emit_csv(const Table& table, const std::filesystem::path& destination) {
  std::ofstream out(destination, std::ios::binary);
  if (!out) throw IoError("cannot open " + destination.string() + " for writing");
  emit_csv(table, out);
  out.flush();
  if (!out) throw IoError("write failed for " + destination.string());
}

namespace {
std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}
}  // namespace

Table parse_csv(std::istream& in) {
  Table t;
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("parse_csv: missing header");
  t.columns = split(line);
  while (std::getline(in, line)) {
    std::vector<std::optional<double>> row;
    for (const auto& cell : split(line)) {
      if (cell.empty()) {
        row.emplace_back();
        continue;
      }
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec != std::errc() || ptr != cell.data() + cell.size())
        throw std::invalid_argument("parse_csv: bad number '" + cell + "'");
      row.emplace_back(v);
    }
    t.add_row(std::move(row));
  }
  return t;
}

}  // namespace fermitrap
