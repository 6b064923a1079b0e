#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tmwords/cache.hpp"
#include "tmwords/report.hpp"

namespace tmwords {

struct VerifyOptions {
  /// Shrinks the expensive criteria (growth range, complexity ranges) and
  /// skips the nested determinism rerun.
  bool quick = false;
  SequenceCache cache = SequenceCache::disabled();
};

struct Criterion {
  int id = 0;
  std::string name;
  long long limit_ms = 0;  // runtime budget for the full (non-quick) run
  std::function<ReportEnvelope(const VerifyOptions&)> check;
};

/// The twelve acceptance criteria in order.
const std::vector<Criterion>& acceptance_criteria();

/// Runs one criterion with timing. Inconclusive oracles become status
/// "inconclusive"; any other exception becomes "fail" with the message as
/// evidence.
ReportEnvelope run_criterion(const Criterion& c, const VerifyOptions& options);

/// Runs all criteria in order; `ids` restricts the set when non-empty.
std::vector<ReportEnvelope> run_acceptance(const VerifyOptions& options, const std::vector<int>& ids = {});

}  // namespace tmwords
