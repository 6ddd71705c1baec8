#include "hypab/output.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <set>
#include <stdexcept>
#include <system_error>

#include "json.hpp"

namespace hypab {

void OutputRecord::check() const {
  if (schema_version.empty() || command.empty()) {
    throw std::logic_error("OutputRecord: schema_version/command required");
  }
  std::set<std::string> seen(columns.begin(), columns.end());
  if (seen.size() != columns.size()) {
    throw std::logic_error("OutputRecord: duplicate column names");
  }
  for (const auto& row : rows) {
    if (row.size() != columns.size()) {
      throw std::logic_error("OutputRecord: ragged row");
    }
    for (double v : row) {
      if (!std::isfinite(v)) {
        throw std::logic_error("OutputRecord: non-finite value");
      }
    }
  }
}

std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  if (res.ec != std::errc()) {
    throw std::logic_error("format_double: buffer too small");
  }
  return std::string(buf, res.ptr);
}

namespace {

// RFC 4180 quoting; only ever needed for caller-supplied names
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  q += '"';
  return q;
}

}  // namespace

void write_csv(std::ostream& os, const OutputRecord& rec) {
  rec.check();
  os << "# " << rec.schema_version << "," << rec.command << "\n";
  for (std::size_t i = 0; i < rec.columns.size(); ++i) {
    os << (i ? "," : "") << csv_field(rec.columns[i]);
  }
  os << "\n";
  for (const auto& row : rec.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << (i ? "," : "") << format_double(row[i]);
    }
    os << "\n";
  }
}

void write_json(std::ostream& os, const OutputRecord& rec) {
  rec.check();
  nlohmann::ordered_json j;
  j["schema_version"] = rec.schema_version;
  j["command"] = rec.command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& kv : rec.parameters) params[kv.first] = kv.second;
  j["parameters"] = params;
  j["columns"] = rec.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : rec.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) r[rec.columns[i]] = row[i];
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  os << j.dump(2) << "\n";
}

void write_record(std::ostream& os, const OutputRecord& rec, OutputFormat f) {
  if (f == OutputFormat::csv) {
    write_csv(os, rec);
  } else {
    write_json(os, rec);
  }
}

}  // namespace hypab
