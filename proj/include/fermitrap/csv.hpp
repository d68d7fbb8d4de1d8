#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fermitrap {

/// Column-named numeric table. An empty cell marks a point where the quantity
/// is undefined (degenerate position, state outside the model).
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::optional<double>>> rows;

  void add_row(std::vector<std::optional<double>> row);
};

/// Header line, then one line per row, 17 significant digits, '\n' terminated.
void emit_csv(const Table& table, std::ostream& out);
void emit_csv(const Table& table, const std::filesystem::path& destination);

/// Inverse of emit_csv, used to check emitted files.
Table parse_csv(std::istream& in);

}  // namespace fermitrap
