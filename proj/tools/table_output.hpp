#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace gelint::cli {

enum class OutputFormat { HumanTable, CSV, JSON };

// Throws DomainError for anything but "table", "human", "csv" or "json".
OutputFormat parse_format(std::string_view text);

using Cell = std::variant<double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

// 17 significant digits, so binary64 values round-trip; infinities print as
// "inf" / "-inf".
std::string format_number(double v);

void write_table(const Table& table, OutputFormat format, std::ostream& out);

}  // namespace gelint::cli
