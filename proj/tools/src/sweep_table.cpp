#include "steersim/app/sweep_table.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "steersim/errors.hpp"

namespace steersim::app {

SweepTable::SweepTable(std::vector<std::string> names, std::size_t parameter_count)
    : names_(std::move(names)), parameter_count_(parameter_count), columns_(names_.size()) {
  if (parameter_count_ > names_.size()) {
    throw ContractError("SweepTable: more parameter columns than columns");
  }
}

std::size_t SweepTable::row_count() const noexcept {
  return columns_.empty() ? 0 : columns_.front().size();
}

void SweepTable::add_row(const std::vector<double>& row) {
  if (row.size() != names_.size()) {
    throw ContractError("SweepTable: row has " + std::to_string(row.size()) + " fields, expected " +
                        std::to_string(names_.size()));
  }
  for (std::size_t i = 0; i < row.size(); ++i) columns_[i].push_back(row[i]);
}

const std::vector<double>& SweepTable::column(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw ContractError("SweepTable: no column named " + name);
  return columns_[static_cast<std::size_t>(it - names_.begin())];
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

void write_csv(std::ostream& os, const SweepTable& table) {
  for (std::size_t c = 0; c < table.column_count(); ++c) {
    if (c) os << ',';
    os << table.names()[c];
  }
  os << '\n';
  for (std::size_t r = 0; r < table.row_count(); ++r) {
    for (std::size_t c = 0; c < table.column_count(); ++c) {
      if (c) os << ',';
      os << format_number(table.at(r, c));
    }
    os << '\n';
  }
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_number(const std::string& s) {
  if (s == "nan") return std::nan("");
  if (s == "inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  double x = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw ContractError("read_csv: cannot parse '" + s + "'");
  }
  return x;
}

}  // namespace

SweepTable read_csv(std::istream& is, std::size_t parameter_count) {
  std::string line;
  if (!std::getline(is, line)) throw ContractError("read_csv: missing header");
  SweepTable table(split(line), parameter_count);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto fields = split(line);
    std::vector<double> row;
    row.reserve(fields.size());
    for (const auto& f : fields) row.push_back(parse_number(f));
    table.add_row(row);
  }
  return table;
}

}  // namespace steersim::app
