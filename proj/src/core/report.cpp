#include "report.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "error.hpp"

namespace slhash {

bool AcceptanceReport::overall() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.passed; });
}

std::string AcceptanceReport::table() const {
  std::size_t w_name = 5, w_obs = 8, w_req = 8;
  for (const auto& c : checks) {
    w_name = std::max(w_name, c.name.size());
    w_obs = std::max(w_obs, c.observed.size());
    w_req = std::max(w_req, c.required.size());
  }
  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w > s.size() ? w - s.size() : 0, ' ');
  };
  std::ostringstream out;
  out << "== " << experiment << " ==\n";
  out << pad("check", w_name) << "  " << pad("observed", w_obs) << "  "
      << pad("required", w_req) << "  result\n";
  for (const auto& c : checks) {
    out << pad(c.name, w_name) << "  " << pad(c.observed, w_obs) << "  "
        << pad(c.required, w_req) << "  " << (c.passed ? "PASS" : "FAIL")
        << (c.artifact_tolerance ? "  (artifact-chosen tolerance)" : "") << "\n";
  }
  for (const auto& f : findings) {
    out << "note: " << f.name << " = " << f.value << "\n";
  }
  out << "overall: " << (overall() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

void CsvTable::add_row(std::vector<std::string> row) {
  rows_.push_back(std::move(row));
}

namespace {

std::string quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void append_line(std::string& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += ',';
    out += quote(fields[i]);
  }
  out += '\n';
}

}  // namespace

std::string CsvTable::body() const {
  std::string out;
  append_line(out, header_);
  for (const auto& row : rows_) append_line(out, row);
  return out;
}

void CsvTable::write(const std::string& path, const Metadata& metadata) const {
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(parent, ec);
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::kIo, "cannot open " + path + " for writing");
  for (const auto& [key, value] : metadata) {
    file << "# " << key << ": " << value << '\n';
  }
  file << body();
  if (!file) throw Error(ErrorCode::kIo, "failed writing " + path);
}

CsvTable report_table(const AcceptanceReport& report) {
  CsvTable table({"check", "claim", "observed", "required", "pass",
                  "artifact_tolerance"});
  for (const auto& c : report.checks) {
    table.add_row({c.name, c.claim, c.observed, c.required,
                   c.passed ? "true" : "false",
                   c.artifact_tolerance ? "true" : "false"});
  }
  for (const auto& f : report.findings) {
    table.add_row({f.name, "note", f.value, "", "", ""});
  }
  table.add_row({"overall", "", "", "", report.overall() ? "true" : "false", ""});
  return table;
}

std::string report_path_for(const std::string& csv_path) {
  std::filesystem::path p(csv_path);
  if (p.extension() == ".csv") p.replace_extension();
  return p.string() + ".report.csv";
}

}  // namespace slhash
