#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "delkit/exact.hpp"

namespace delkit::cli {

using Cell = std::variant<std::string, ExactCount, double, bool>;

/// A schema-tagged table; the unit of CSV and JSON output.
struct Table {
  std::string schema;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class Format { csv, json };

/// 17 significant digits, enough to round-trip any double.
std::string format_double(double v);

void write_csv(std::ostream& out, const Table& t);
void write_json(std::ostream& out, const Table& t);
void write_table(std::ostream& out, const Table& t, Format f);

}  // namespace delkit::cli
