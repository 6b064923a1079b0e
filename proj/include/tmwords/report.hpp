#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

namespace tmwords {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "tmwords 1.0.0";

enum class Status { kPass, kFail, kInconclusive };

const char* to_string(Status s) noexcept;

/// Machine-readable result of one check or query.
struct ReportEnvelope {
  std::string claim_id;
  Json parameters = Json::object();
  Status status = Status::kPass;
  Json evidence = Json::object();
  std::int64_t elapsed_ms = 0;
};

enum class Format { kJson, kCsv };

/// JSON: {tool, claim_id, parameters, status, evidence[, elapsed_ms]} in that
/// order, one line. CSV: only for evidence of the form {columns: [...],
/// rows: [[...], ...]}; otherwise FormatError. Timings are left out unless
/// asked for so that repeated runs print identical bytes.
std::string emit(const ReportEnvelope& report, Format format, bool with_timing = false);

/// Exit-code taxonomy shared by the CLI: 0 pass, 1 fail, 2 inconclusive.
int exit_code_for(Status s) noexcept;
/// Worst status wins: fail > inconclusive > pass.
Status combine(Status a, Status b) noexcept;

/// Exact rationals travel as "p/q" strings (or "p" when integral).
template <typename R>
std::string rational_string(const R& r) {
  const auto num = numerator(r);
  const auto den = denominator(r);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

}  // namespace tmwords
