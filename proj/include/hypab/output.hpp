#pragma once

// Deterministic table emission for the CLI: one record = one command's
// output, rendered as CSV (default) or JSON. Formatting is fixed --
// shortest round-trip floats, insertion-ordered keys, LF line ends, no
// timestamps -- so identical flags give byte-identical files.

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace hypab {

inline constexpr const char* output_schema_version = "1.0.0";

struct OutputRecord {
  std::string schema_version = output_schema_version;
  std::string command;
  // echoed invocation parameters, in flag order
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;  // each sized like columns

  // throws std::logic_error on empty command, duplicate column names,
  // ragged rows, or non-finite values
  void check() const;
};

// shortest decimal string that parses back to exactly v (<= 17 significant
// digits for doubles)
std::string format_double(double v);

// one-line `# schema_version,command` comment, a header row, then data
// rows; fields are quoted per RFC 4180 where they need it (data cells
// never do)
void write_csv(std::ostream& os, const OutputRecord& rec);

// object with schema_version / command / parameters / columns / rows,
// rows as name -> value objects in column order
void write_json(std::ostream& os, const OutputRecord& rec);

enum class OutputFormat { csv, json };

void write_record(std::ostream& os, const OutputRecord& rec, OutputFormat f);

}  // namespace hypab
