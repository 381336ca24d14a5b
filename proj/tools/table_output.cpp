#include "table_output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include <json.hpp>

#include "gelint/errors.hpp"

namespace gelint::cli {

namespace {

std::string cell_text(const Cell& c) {
  if (const double* d = std::get_if<double>(&c)) return format_number(*d);
  return std::get<std::string>(c);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void write_csv(const Table& t, std::ostream& out) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    out << (i ? "," : "") << csv_escape(t.columns[i]);
  }
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << csv_escape(cell_text(row[i]));
    }
    out << '\n';
  }
}

void write_json(const Table& t, std::ostream& out) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      const Cell& c = row[i];
      const double* d = std::get_if<double>(&c);
      // JSON has no infinity; such cells travel as their CSV text.
      if (d && std::isfinite(*d)) {
        obj[t.columns[i]] = *d;
      } else {
        obj[t.columns[i]] = cell_text(c);
      }
    }
    arr.push_back(std::move(obj));
  }
  out << arr.dump(2) << '\n';
}

void write_human(const Table& t, std::ostream& out) {
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
  std::vector<std::vector<std::string>> text;
  text.reserve(t.rows.size());
  for (const auto& row : t.rows) {
    auto& line = text.emplace_back();
    for (std::size_t i = 0; i < row.size(); ++i) {
      line.push_back(cell_text(row[i]));
      width[i] = std::max(width[i], line.back().size());
    }
  }
  const auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out << (i ? "  " : "") << cells[i]
          << std::string(width[i] - cells[i].size(), ' ');
    }
    out << '\n';
  };
  emit(t.columns);
  for (const auto& line : text) emit(line);
}

}  // namespace

OutputFormat parse_format(std::string_view text) {
  if (text == "table" || text == "human") return OutputFormat::HumanTable;
  if (text == "csv") return OutputFormat::CSV;
  if (text == "json") return OutputFormat::JSON;
  throw DomainError("format", "unknown output format '" + std::string(text) + "'");
}

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_table(const Table& table, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::CSV:
      write_csv(table, out);
      break;
    case OutputFormat::JSON:
      write_json(table, out);
      break;
    case OutputFormat::HumanTable:
      write_human(table, out);
      break;
  }
}

}  // namespace gelint::cli
