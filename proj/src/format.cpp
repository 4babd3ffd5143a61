#include "ccc/format.hpp"

#include <algorithm>
#include <sstream>

namespace ccc {

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "table") return OutputFormat::Table;
  throw std::invalid_argument("unknown format '" + name + "' (json, csv, table)");
}

ReportRow row_from_report(std::string family, std::string params, ZagrebReport r) {
  ReportRow row;
  row.family = std::move(family);
  row.params = std::move(params);
  row.report = std::move(r);
  return row;
}

ReportRow row_from_record(std::string family, std::string params,
                          const VerificationRecord& rec) {
  ReportRow row;
  row.family = std::move(family);
  row.params = std::move(params);
  row.report = rec.report;
  row.has_verification = true;
  row.closed_m1 = rec.predicted.closed_m1.str();
  row.closed_m2 = rec.predicted.closed_m2.str();
  row.case_label = rec.predicted.case_label;
  row.structure_match = rec.structure_match;
  row.equality_as_predicted = rec.equality_as_predicted;
  row.discrepancy_notes = rec.discrepancy_notes;
  return row;
}

namespace {

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string joined_notes(const std::vector<std::string>& notes) {
  std::string out;
  for (std::size_t i = 0; i < notes.size(); ++i) {
    if (i) out += "; ";
    out += notes[i];
  }
  return out;
}

std::vector<std::string> row_cells(const ReportRow& r, bool verification) {
  std::vector<std::string> cells{
      r.family,
      r.params,
      r.report.num_vertices.str(),
      r.report.num_edges.str(),
      r.report.m1.str(),
      r.report.m2.str(),
      r.report.lhs.str(),
      r.report.rhs.str(),
      verdict_name(r.report.verdict),
  };
  if (verification) {
    cells.push_back(r.closed_m1);
    cells.push_back(r.closed_m2);
    cells.push_back(r.case_label);
    cells.push_back(r.structure_match ? "true" : "false");
    cells.push_back(r.equality_as_predicted ? "true" : "false");
    cells.push_back(joined_notes(r.discrepancy_notes));
  }
  return cells;
}

std::vector<std::string> header_cells(bool verification) {
  std::vector<std::string> cells{"family", "params", "V",   "E",   "M1",
                                 "M2",     "lhs",    "rhs", "verdict"};
  if (verification) {
    cells.insert(cells.end(), {"closed_M1", "closed_M2", "case_label",
                               "structure_match", "equality_as_predicted",
                               "discrepancy_notes"});
  }
  return cells;
}

}  // namespace

std::string format_rows(const std::vector<ReportRow>& rows, OutputFormat format) {
  if (rows.empty()) throw std::invalid_argument("no records to format");
  const bool verification =
      std::any_of(rows.begin(), rows.end(),
                  [](const ReportRow& r) { return r.has_verification; });

  if (format == OutputFormat::Json) {
    auto arr = nlohmann::json::array();
    for (const ReportRow& r : rows) {
      nlohmann::json j = r.report.to_json();
      j["family"] = r.family;
      j["params"] = r.params;
      if (r.has_verification) {
        j["closed_m1"] = r.closed_m1;
        j["closed_m2"] = r.closed_m2;
        j["case_label"] = r.case_label;
        j["structure_match"] = r.structure_match;
        j["equality_as_predicted"] = r.equality_as_predicted;
        j["discrepancy_notes"] = r.discrepancy_notes;
      }
      arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
  }

  std::vector<std::vector<std::string>> grid{header_cells(verification)};
  for (const ReportRow& r : rows) grid.push_back(row_cells(r, verification));

  std::ostringstream os;
  if (format == OutputFormat::Csv) {
    for (const auto& row : grid) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) os << ',';
        os << csv_quote(row[i]);
      }
      os << '\n';
    }
    return os.str();
  }

  std::vector<std::size_t> width(grid[0].size(), 0);
  for (const auto& row : grid)
    for (std::size_t i = 0; i < row.size(); ++i)
      width[i] = std::max(width[i], row[i].size());
  for (const auto& row : grid) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << "  ";
      os << row[i] << std::string(width[i] - row[i].size(), ' ');
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace ccc
