#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace slhash {

/// One pass/fail criterion of an experiment.
struct Check {
  std::string name;
  std::string claim;     // which statement the check exercises
  std::string observed;
  std::string required;
  bool passed = false;
  bool artifact_tolerance = false;  // threshold chosen here, not a proven constant
};

/// Observations that are reported but do not gate the outcome.
struct Finding {
  std::string name;
  std::string value;
};

struct AcceptanceReport {
  std::string experiment;
  std::vector<Check> checks;
  std::vector<Finding> findings;

  bool overall() const;
  void add(Check check) { checks.push_back(std::move(check)); }
  void note(std::string name, std::string value) {
    findings.push_back({std::move(name), std::move(value)});
  }

  /// Fixed-width table for terminals.
  std::string table() const;
};

/// Ordered "# key: value" metadata lines written before the CSV header.
using Metadata = std::vector<std::pair<std::string, std::string>>;

/// Comma-separated, '\n' line endings, '#'-prefixed metadata block.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

  void add_row(std::vector<std::string> row);
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }

  /// Header plus rows, without metadata.
  std::string body() const;
  /// Throws Error(kIo) when the file cannot be written.
  void write(const std::string& path, const Metadata& metadata) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

CsvTable report_table(const AcceptanceReport& report);

/// "out/fig1.csv" -> "out/fig1.report.csv".
std::string report_path_for(const std::string& csv_path);

}  // namespace slhash
