#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tmwords/report.hpp"
#include "tmwords/series.hpp"

namespace tmwords {

inline constexpr int kUsageExit = 64;

/// The command-line tool, minus the process boundary. `args` excludes the
/// program name. Reports go to `out`, diagnostics and help to `err`.
/// Returns 0 pass, 1 fail, 2 inconclusive, 64 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Witness, R, swap checks, fixed-middle counts and the contradiction
/// report for one k. Splits are exhaustive when `exhaustive_splits` is set
/// and otherwise the fixed sample at k = 2 (k = 1 is always exhaustive).
/// The harness part needs k <= 2; larger k report the closed forms only.
ReportEnvelope interchange_envelope(unsigned k, const Rational& c, bool exhaustive_splits);

}  // namespace tmwords
