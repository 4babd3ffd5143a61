#pragma once

#include <string>
#include <vector>

#include "ccc/predictions.hpp"
#include "ccc/zagreb.hpp"

namespace ccc {

enum class OutputFormat { Json, Csv, Table };

OutputFormat parse_format(const std::string& name);  // "json" | "csv" | "table"

/// One row of a report/scan table. The verification columns are only
/// emitted when any row in the batch carries them.
struct ReportRow {
  std::string family;  // family or case selector, e.g. "dihedral"
  std::string params;  // e.g. "m=12" or "p=3,m=1,n=2"
  ZagrebReport report;
  bool has_verification = false;
  std::string closed_m1;  // closed-form indices, shown beside the brute ones
  std::string closed_m2;
  std::string case_label;
  bool structure_match = false;
  bool equality_as_predicted = false;
  std::vector<std::string> discrepancy_notes;
};

ReportRow row_from_report(std::string family, std::string params, ZagrebReport r);
ReportRow row_from_record(std::string family, std::string params,
                          const VerificationRecord& rec);

/// Deterministic, byte-stable rendering. CSV has a fixed header; table
/// output is column-aligned.
std::string format_rows(const std::vector<ReportRow>& rows, OutputFormat format);

}  // namespace ccc
