#include "tmwords/report.hpp"

#include "tmwords/errors.hpp"

namespace tmwords {

namespace {

std::string csv_cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

}  // namespace

const char* to_string(Status s) noexcept {
  switch (s) {
    case Status::kPass:
      return "pass";
    case Status::kFail:
      return "fail";
    case Status::kInconclusive:
      return "inconclusive";
  }
  return "fail";
}

std::string emit(const ReportEnvelope& report, Format format, bool with_timing) {
  if (format == Format::kJson) {
    Json j;
    j["tool"] = kToolVersion;
    j["claim_id"] = report.claim_id;
    j["parameters"] = report.parameters;
    j["status"] = to_string(report.status);
    j["evidence"] = report.evidence;
    if (with_timing) j["elapsed_ms"] = report.elapsed_ms;
    return j.dump() + "\n";
  }
  const Json& ev = report.evidence;
  if (!ev.is_object() || !ev.contains("columns") || !ev.contains("rows") || !ev["columns"].is_array() ||
      !ev["rows"].is_array()) {
    throw FormatError("CSV output needs a tabular payload; '" + report.claim_id + "' is not tabular");
  }
  std::string out;
  bool first = true;
  for (const auto& col : ev["columns"]) {
    if (!first) out += ',';
    out += csv_cell(col);
    first = false;
  }
  out += '\n';
  for (const auto& row : ev["rows"]) {
    first = true;
    for (const auto& cell : row) {
      if (!first) out += ',';
      out += csv_cell(cell);
      first = false;
    }
    out += '\n';
  }
  return out;
}

int exit_code_for(Status s) noexcept {
  switch (s) {
    case Status::kPass:
      return 0;
    case Status::kFail:
      return 1;
    case Status::kInconclusive:
      return 2;
  }
  return 1;
}

Status combine(Status a, Status b) noexcept {
  if (a == Status::kFail || b == Status::kFail) return Status::kFail;
  if (a == Status::kInconclusive || b == Status::kInconclusive) return Status::kInconclusive;
  return Status::kPass;
}

}  // namespace tmwords
