#include "table.hpp"

#include <cstdio>
#include <limits>

#include <json.hpp>

namespace delkit::cli {

namespace {

constexpr int kSchemaVersion = 1;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

std::string cell_text(const Cell& c) {
  struct {
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(const ExactCount& v) const { return to_string(v); }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
  } visit;
  return std::visit(visit, c);
}

nlohmann::ordered_json cell_json(const Cell& c) {
  if (const auto* v = std::get_if<ExactCount>(&c)) {
    // Counts past 64 bits go out as decimal strings so nothing is rounded.
    if (*v >= 0 && *v <= std::numeric_limits<std::uint64_t>::max()) {
      return v->convert_to<std::uint64_t>();
    }
    if (*v < 0 && *v >= std::numeric_limits<std::int64_t>::min()) {
      return v->convert_to<std::int64_t>();
    }
    return to_string(*v);
  }
  if (const auto* d = std::get_if<double>(&c)) return *d;
  if (const auto* b = std::get_if<bool>(&c)) return *b;
  return std::get<std::string>(c);
}

}  // namespace

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& out, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    out << (i ? "," : "") << csv_field(t.columns[i]);
  }
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << csv_field(cell_text(row[i]));
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, const Table& t) {
  nlohmann::ordered_json doc;
  doc["schema"] = t.schema;
  doc["version"] = kSchemaVersion;
  doc["columns"] = t.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = cell_json(row[i]);
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

void write_table(std::ostream& out, const Table& t, Format f) {
  if (f == Format::csv) {
    write_csv(out, t);
  } else {
    write_json(out, t);
  }
}

}  // namespace delkit::cli
