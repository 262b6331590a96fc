#pragma once

#include <cstdio>
#include <fstream>
#include <string>
#include <unordered_map>
#include <vector>

namespace gpp {

/// Formats a double with 9 significant digits, '.' decimal separator.
inline std::string format_g9(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  return std::string(buf);
}

/// Minimal CSV writer: comma separator, no quoting (fields never contain
/// commas in the formats this project emits).
class CsvWriter {
public:
  explicit CsvWriter(const std::string& path);
  void write_row(const std::vector<std::string>& fields);
  bool good() const { return out_.good(); }

private:
  std::ofstream out_;
};

/// In-memory CSV table with header lookup.
class CsvTable {
public:
  static CsvTable read_file(const std::string& path);

  std::size_t rows() const { return cells_.size(); }
  const std::vector<std::string>& header() const { return header_; }
  bool has_column(const std::string& name) const;
  /// Throws gpp::LoadError when the column is absent.
  std::size_t column(const std::string& name) const;
  const std::string& cell(std::size_t row, std::size_t col) const { return cells_[row][col]; }
  double number(std::size_t row, std::size_t col) const;
  double number(std::size_t row, const std::string& name) const { return number(row, column(name)); }
  const std::string& text(std::size_t row, const std::string& name) const {
    return cells_[row][column(name)];
  }

private:
  std::vector<std::string> header_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<std::string>> cells_;
};

std::vector<std::string> split_csv_line(const std::string& line);

}  // namespace gpp
