#pragma once

// Column-oriented table of sweep results and its CSV form.
//
// CSV: header row of column names, '.' decimal separator, shortest
// round-trip rendering of each double, '\n' line endings.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace steersim::app {

class SweepTable {
 public:
  SweepTable() = default;

  // The first `parameter_count` names are parameter columns, the rest results.
  SweepTable(std::vector<std::string> names, std::size_t parameter_count);

  const std::vector<std::string>& names() const noexcept { return names_; }
  std::size_t parameter_count() const noexcept { return parameter_count_; }
  std::size_t column_count() const noexcept { return names_.size(); }
  std::size_t row_count() const noexcept;

  // Throws ContractError if row.size() != column_count().
  void add_row(const std::vector<double>& row);

  const std::vector<double>& column(std::size_t i) const { return columns_.at(i); }
  // Throws ContractError for an unknown name.
  const std::vector<double>& column(const std::string& name) const;
  double at(std::size_t row, std::size_t col) const { return columns_.at(col).at(row); }

  friend bool operator==(const SweepTable&, const SweepTable&) = default;

 private:
  std::vector<std::string> names_;
  std::size_t parameter_count_ = 0;
  std::vector<std::vector<double>> columns_;
};

// Shortest decimal string that parses back to exactly `x`; "nan", "inf",
// "-inf" for non-finite values.
std::string format_number(double x);

void write_csv(std::ostream& os, const SweepTable& table);

// Reads a table written by write_csv. All columns are read as result columns
// unless `parameter_count` says otherwise. Throws ContractError on a ragged
// row or an unparsable field.
SweepTable read_csv(std::istream& is, std::size_t parameter_count = 0);

}  // namespace steersim::app
